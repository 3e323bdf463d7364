#include "lexdom/constructions.hpp"

#include <algorithm>
#include <string>

#include "lexdom/families.hpp"

namespace lexdom {

namespace {

using K = InvariantKind;

const std::vector<std::vector<int>> kRows = {
    {2, 1},                    // P2
    {0, 2, 1},                 // P3
    {0, 2, 2, 0},              // P4
    {0, 2, 1, 2, 0},           // P5
    {0, 2, 1, 1, 2, 0},        // P6
    {0, 2, 1, 0, 1, 2, 0},     // P7
    {0, 2, 1, 0, 1, 2, 2, 0},  // P8
};

bool dominates(const Graph& g, VertexSet s) {
    Bits covered = 0;
    for (int v : s.members()) covered |= g.closed_neighbors(v);
    return covered == g.vertex_mask();
}

VertexSet checked(const Graph& product, K kind, VertexSet s, std::size_t size, const char* what) {
    if (s.size() != static_cast<int>(size) || !validate(product, kind, s))
        throw ConstructionError(std::string(what) + " produced an invalid witness " + to_string(s));
    return s;
}

}  // namespace

std::vector<int> path_scheme_row(int n) {
    if (n < 2) throw std::invalid_argument("path scheme needs n >= 2");
    if (n <= 8) return kRows[n - 2];
    const int q = n / 7, r = n % 7;
    std::vector<int> row;
    const int blocks = r == 1 ? q - 1 : q;
    for (int i = 0; i < blocks; ++i) row.insert(row.end(), kRows[5].begin(), kRows[5].end());
    if (r == 1) row.insert(row.end(), kRows[6].begin(), kRows[6].end());
    else if (r >= 2) row.insert(row.end(), kRows[r - 2].begin(), kRows[r - 2].end());
    return row;
}

int path_scheme_size(int n) {
    if (n < 2) throw std::invalid_argument("path scheme needs n >= 2");
    const int r = n % 7;
    return n - n / 7 + (r == 1 || r == 2 ? 1 : 0);
}

std::optional<VertexSet> smallest_dominating_pair(const Graph& h) {
    for (int a = 0; a < h.order(); ++a)
        for (int b = a + 1; b < h.order(); ++b)
            if (dominates(h, VertexSet{a, b})) return VertexSet{a, b};
    return std::nullopt;
}

VertexSet path_scheme_gamma2(int n, const Graph& h, std::optional<VertexSet> dom_pair, std::optional<int> single) {
    auto row = path_scheme_row(n);
    if (!dom_pair) dom_pair = smallest_dominating_pair(h);
    if (!dom_pair || dom_pair->size() != 2 || (dom_pair->bits() & ~h.vertex_mask()) || !dominates(h, *dom_pair))
        throw std::invalid_argument("dom_pair must be a dominating 2-set of H");
    const auto pair = dom_pair->members();
    const int dot = single.value_or(pair[0]);
    if (dot < 0 || dot >= h.order()) throw std::invalid_argument("single vertex out of range");

    auto product = lex_product(path_graph(n), h);
    const auto& idx = product.index;
    VertexSet s;
    for (int u = 0; u < n; ++u) {
        if (row[u] == 2) {
            s.insert(idx.encode(u, pair[0]));
            s.insert(idx.encode(u, pair[1]));
        } else if (row[u] == 1) {
            s.insert(idx.encode(u, dot));
        }
    }
    return checked(product.graph, K::double_domination, s, path_scheme_size(n), "path scheme");
}

VertexSet small_value_witness(const Graph& g, const Graph& h, SmallValueCase c, std::optional<VertexSet> h_pair,
                              const InvariantOracle& oracle) {
    if (!small_value_case_holds(g, h, c, oracle))
        throw PremiseError("case (" + to_string(c) + ") does not hold for this pair");
    auto product = lex_product(g, h);
    const auto& idx = product.index;
    const auto ug = universal_vertices(g).members();
    const auto uh = universal_vertices(h).members();

    auto gamma_pair = [&]() {
        if (h_pair) {
            if (h_pair->size() != 2 || (h_pair->bits() & ~h.vertex_mask()) || !dominates(h, *h_pair))
                throw std::invalid_argument("h_pair must be a dominating 2-set of H");
            return h_pair->members();
        }
        return std::get<VertexSet>(min_witness(h, K::domination)).members();
    };
    auto first_other = [&](std::initializer_list<int> taken) {
        for (int v = 0; v < g.order(); ++v)
            if (std::find(taken.begin(), taken.end(), v) == taken.end()) return v;
        throw PremiseError("G has too few vertices");
    };
    auto lift = [&](VertexSet x, int v) {
        VertexSet s;
        for (int u : x.members()) s.insert(idx.encode(u, v));
        return s;
    };

    VertexSet d;
    switch (c) {
        case SmallValueCase::i: {
            auto p = gamma_pair();
            d = VertexSet{idx.encode(0, p[0]), idx.encode(0, p[1]), idx.encode(1, p[0])};
            break;
        }
        case SmallValueCase::ii: {
            const int u = ug[0], w = ug[1], z = first_other({u, w});
            d = VertexSet{idx.encode(u, 0), idx.encode(w, 0), idx.encode(z, 0)};
            break;
        }
        case SmallValueCase::iii: {
            const int u = ug[0], w = first_other({u});
            int v1, v2;
            if (oracle.require(h, K::domination) == 2) {
                auto p = gamma_pair();
                v1 = p[0];
                v2 = p[1];
            } else {
                v1 = uh[0];
                v2 = v1 == 0 ? 1 : 0;
            }
            d = VertexSet{idx.encode(u, v1), idx.encode(u, v2), idx.encode(w, v1)};
            break;
        }
        case SmallValueCase::iv:
        case SmallValueCase::v:
            d = lift(std::get<VertexSet>(min_witness(g, K::double_total)), 0);
            break;
        case SmallValueCase::vi:
            d = lift(std::get<VertexSet>(min_witness(g, K::double_domination)), uh.at(0));
            break;
    }
    return checked(product.graph, K::double_domination, d, 3, "small value case");
}

VertexSet two_universal_witness(const Graph& g, const Graph& h, std::optional<VertexSet> g_set) {
    const auto uh = universal_vertices(h).members();
    if (uh.size() < 2) throw PremiseError("H must have at least two universal vertices");
    auto product = lex_product(g, h);
    auto dom = std::get<VertexSet>(min_witness(g, K::domination));
    if (g_set) {
        if (g_set->size() != dom.size() || (g_set->bits() & ~g.vertex_mask()) || !dominates(g, *g_set))
            throw std::invalid_argument("g_set must be a minimum dominating set of G");
        dom = *g_set;
    }
    auto s = product.index.cross(dom, VertexSet{uh[0], uh[1]});
    return checked(product.graph, K::double_domination, s, 2 * dom.size(), "two-universal lift");
}

WeightFn universal_lift_witness(const Graph& g, const Graph& h) {
    const auto uh = universal_vertices(h).members();
    if (uh.empty()) throw PremiseError("H must have a universal vertex");
    if (g.order() == 0 || has_isolated_vertex(g)) throw PremiseError("G must have no isolated vertex");
    auto product = lex_product(g, h);
    auto f = std::get<WeightFn>(min_witness(g, K::total_roman2));
    auto lifted = WeightFn::zeros(product.index.size());
    for (int u = 0; u < g.order(); ++u) lifted.set(product.index.encode(u, uh[0]), f[u]);
    if (lifted.weight() != f.weight() || !validate(product.graph, K::total_roman2, lifted))
        throw ConstructionError("universal lift produced an invalid function " + to_string(lifted));
    return lifted;
}

VertexSet hk_witness(int k, const std::vector<int>& sizes) {
    FamilySpec spec{FamilyKind::family_hk, {k}};
    spec.params.insert(spec.params.end(), sizes.begin(), sizes.end());
    spec.validate();
    auto g = family(spec);
    return checked(g, K::double_total, VertexSet::all(k), k, "H_k cycle");
}

}  // namespace lexdom
