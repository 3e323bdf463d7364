#include "lexdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lexdom/enumerate.hpp"
#include "lexdom/formulas.hpp"
#include "lexdom/graph6.hpp"
#include "lexdom/invariants.hpp"
#include "lexdom/product.hpp"

namespace lexdom {

namespace {

using K = InvariantKind;

// ---------------------------------------------------------------------------------------------
// Config

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' needs an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw std::invalid_argument("config key '" + key + "' needs a boolean, got '" + value + "'");
}

// ---------------------------------------------------------------------------------------------
// Check plumbing

struct Outcome {
    enum Kind { pass, skip, fail } kind = pass;
    std::string reason;  // skip reason
    std::string observed;
    std::string expected;
};

Outcome skip(std::string reason) { return {Outcome::skip, std::move(reason), {}, {}}; }
Outcome fail(std::string observed, std::string expected) {
    return {Outcome::fail, {}, std::move(observed), std::move(expected)};
}
Outcome verdict(bool ok, const std::string& observed, const std::string& expected) {
    return ok ? Outcome{} : fail(observed, expected);
}

enum class Scope { single, pair };
enum class Cap { product, reduced, structural };

struct Ctx {
    const InvariantOracle& oracle;
    const CorpusSpec& corpus;
    int val(const Graph& g, K kind) const { return oracle.require(g, kind); }
};

using CheckFn = Outcome (*)(const CorpusItem&, const Ctx&);

struct CheckDef {
    const char* id;
    const char* title;
    Scope scope;
    Cap cap;
    CheckFn fn;
};

std::string kv(const char* name, int value) { return std::string(name) + "=" + std::to_string(value); }

std::string join(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

std::optional<Outcome> pair_premise(const CorpusItem& it) {
    if (has_isolated_vertex(it.g)) return skip("G has an isolated vertex");
    if (it.h->order() < 2) return skip("H is trivial");
    return std::nullopt;
}

// --- single-graph checks -----------------------------------------------------------------------

Outcome v1_chain(const CorpusItem& it, const Ctx& c) {
    if (has_isolated_vertex(it.g)) return skip("G has an isolated vertex");
    const int gt = c.val(it.g, K::total_domination), tr2 = c.val(it.g, K::total_roman2),
              tr = c.val(it.g, K::total_roman), x2 = c.val(it.g, K::double_domination);
    const bool ok = gt <= tr2 && tr2 <= tr && tr <= 2 * gt && tr2 <= x2;
    return verdict(ok, join({kv("gt", gt), kv("gtr2", tr2), kv("gtr", tr), kv("gx2", x2)}),
                   "gt <= gtr2 <= gtr <= 2gt and gtr2 <= gx2");
}

Outcome v2_matching(const CorpusItem& it, const Ctx& c) {
    if (has_isolated_vertex(it.g)) return skip("G has an isolated vertex");
    const int x2 = c.val(it.g, K::double_domination);
    if (x2 != c.val(it.g, K::total_domination)) return skip("gamma_x2(G) != gamma_t(G)");
    std::optional<VertexSet> bad;
    for_each_optimal_witness(it.g, K::double_domination, [&](const Witness& w) {
        const auto d = std::get<VertexSet>(w);
        for (int v : d.members())
            if (std::popcount(it.g.neighbors(v) & d.bits()) != 1) {
                bad = d;
                return false;
            }
        return true;
    });
    if (bad) return fail("minimum set " + to_string(*bad) + " is not an induced matching", "every minimum set induces copies of K2");
    return {};
}

Outcome v3_twice_total(const CorpusItem& it, const Ctx& c) {
    if (has_isolated_vertex(it.g)) return skip("G has an isolated vertex");
    const int gt = c.val(it.g, K::total_domination), g = c.val(it.g, K::domination),
              tr2 = c.val(it.g, K::total_roman2), tr = c.val(it.g, K::total_roman);
    const bool lhs = tr2 == 2 * gt, rhs = tr2 == tr && gt == g;
    return verdict(lhs == rhs, join({kv("g", g), kv("gt", gt), kv("gtr2", tr2), kv("gtr", tr)}),
                   "gtr2 = 2gt iff (gtr2 = gtr and gt = g)");
}

Outcome v4_value_two(const CorpusItem& it, const Ctx& c) {
    if (has_isolated_vertex(it.g)) return skip("G has an isolated vertex");
    const int x2 = c.val(it.g, K::double_domination), tr2 = c.val(it.g, K::total_roman2);
    const int u = universal_vertices(it.g).size();
    const bool a = x2 == 2, b = tr2 == 2, d = u >= 2;
    return verdict(a == b && b == d, join({kv("gx2", x2), kv("gtr2", tr2), kv("universal", u)}),
                   "gx2 = 2 iff gtr2 = 2 iff at least two universal vertices");
}

Outcome v5_spanning(const CorpusItem& it, const Ctx& c) {
    if (has_isolated_vertex(it.g)) return skip("G has an isolated vertex");
    const int x2 = c.val(it.g, K::double_domination);
    bool any = false;
    for (auto [u, v] : it.g.edges()) {
        auto sub = it.g.without_edge(u, v);
        if (has_isolated_vertex(sub)) continue;
        any = true;
        const int y = c.val(sub, K::double_domination);
        if (y < x2)
            return fail(kv("gx2(G)", x2) + ", gx2(G-" + std::to_string(u) + std::to_string(v) + ")=" + std::to_string(y),
                        "deleting an edge never lowers gx2");
    }
    if (!any) return skip("no edge deletion keeps G isolated-free");
    return {};
}

// --- pair checks ---------------------------------------------------------------------------------

Outcome v6_equality(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    auto p = lex_product(it.g, *it.h);
    const int x2 = c.val(p.graph, K::double_domination), tr2 = c.val(p.graph, K::total_roman2);
    return verdict(x2 == tr2, join({kv("gx2(GoH)", x2), kv("gtr2(GoH)", tr2)}), "gx2(GoH) = gtr2(GoH)");
}

Outcome v7_bounds(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    const int x2 = c.val(lex_product(it.g, *it.h).graph, K::double_domination);
    const int gt = c.val(it.g, K::total_domination), rho = c.val(it.g, K::two_packing);
    const int lo = std::max(gt, 2 * rho), hi = 2 * gt;
    return verdict(lo <= x2 && x2 <= hi, kv("gx2(GoH)", x2),
                   "in [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
}

Outcome v8_twice_total_lex(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    auto r = check_2gamma_t_equivalence(it.g, *it.h, c.oracle);
    return verdict(r.lhs == r.rhs,
                   join({kv("gx2(GoH)", r.gamma_x2_product), kv("gtr(GoH)", r.gamma_tr_product), kv("gt(G)", r.gamma_t_g),
                         kv("g(G)", r.gamma_g), kv("g(H)", r.gamma_h)}),
                   "gx2(GoH) = 2gt(G) iff (gx2(GoH) = gtr(GoH) and (gt(G) = g(G) or g(H) >= 2))");
}

Outcome v9_order_bound(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    const int n = it.g.order();
    if (n < 3 || !is_connected(it.g)) return skip("G is not connected of order >= 3");
    const int x2 = c.val(lex_product(it.g, *it.h).graph, K::double_domination);
    const int bound = 2 * (2 * n / 3);
    return verdict(x2 <= bound, kv("gx2(GoH)", x2), "<= " + std::to_string(bound));
}

Outcome v10_two_per_copy(const CorpusItem& it, const Ctx&) {
    if (auto s = pair_premise(it)) return *s;
    auto p = lex_product(it.g, *it.h);
    bool found = false;
    for_each_optimal_witness(p.graph, K::double_domination, [&](const Witness& w) {
        found = projection_profile(std::get<VertexSet>(w), p.index).max_count() <= 2;
        return !found;
    });
    return verdict(found, "every minimum set has a copy with 3 or more vertices",
                   "some minimum set meets every copy in at most 2 vertices");
}

Outcome v11_conditions_h(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    const int x2 = c.val(lex_product(it.g, *it.h).graph, K::double_domination);
    const int tr2 = c.val(it.g, K::total_roman2);
    const auto reg = factor_regime(*it.h, c.oracle);
    const std::string obs = join({kv("gx2(GoH)", x2), kv("gtr2(G)", tr2), kv("g(H)", reg.gamma),
                                  kv("universal(H)", reg.universal_count)});
    if (reg.gamma == 1 && x2 > tr2) return fail(obs, "gx2(GoH) <= gtr2(G) when g(H) = 1");
    if (reg.two_universal() && x2 > 2 * c.val(it.g, K::domination))
        return fail(obs + ", " + kv("g(G)", c.val(it.g, K::domination)), "gx2(GoH) <= 2g(G) with two universal vertices in H");
    if (reg.universal_count == 1 && x2 != tr2) return fail(obs, "gx2(GoH) = gtr2(G) with one universal vertex in H");
    if (reg.gamma >= 2 && x2 < tr2) return fail(obs, "gx2(GoH) >= gtr2(G) when g(H) >= 2");
    return {};
}

Outcome v12_consequences(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    const int g = c.val(it.g, K::domination), gt = c.val(it.g, K::total_domination),
              rho = c.val(it.g, K::two_packing), tr2 = c.val(it.g, K::total_roman2);
    const auto reg = factor_regime(*it.h, c.oracle);
    const bool p1 = g == rho && reg.two_universal();
    const bool p2 = (tr2 == gt || tr2 == 2 * rho) && reg.gamma == 1;
    const bool p3 = tr2 == 2 * gt && reg.gamma >= 2;
    if (!p1 && !p2 && !p3) return skip("no premise holds");
    const int x2 = c.val(lex_product(it.g, *it.h).graph, K::double_domination);
    const std::string obs = join({kv("gx2(GoH)", x2), kv("g(G)", g), kv("gt(G)", gt), kv("rho(G)", rho), kv("gtr2(G)", tr2)});
    if (p1 && x2 != 2 * g) return fail(obs, "gx2(GoH) = 2g(G)");
    if ((p2 || p3) && x2 != tr2) return fail(obs, "gx2(GoH) = gtr2(G)");
    return {};
}

Outcome v13_double_total(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    if (min_degree(it.g) < 2) return skip("min degree of G < 2");
    auto p = lex_product(it.g, *it.h);
    const int x2 = c.val(p.graph, K::double_domination), g2t = c.val(it.g, K::double_total);
    const int p2t = c.val(p.graph, K::double_total);
    const bool ok = x2 <= g2t && x2 <= it.g.order() && p2t <= g2t;
    return verdict(ok, join({kv("gx2(GoH)", x2), kv("g2t(GoH)", p2t), kv("g2t(G)", g2t), kv("n", it.g.order())}),
                   "gx2(GoH) <= g2t(G) <= n and g2t(GoH) <= g2t(G)");
}

Outcome v14_formulas(const CorpusItem& it, const Ctx& c) {
    if (!it.g_spec) return skip("G is not a named family");
    switch (it.g_spec->kind) {
        case FamilyKind::empty:
        case FamilyKind::family_hk:
            return skip("no closed formula for the family");
        default:
            break;
    }
    FormulaResult f;
    try {
        f = gamma_x2_lex_formula(*it.g_spec, *it.h, c.oracle);
    } catch (const PremiseError&) {
        return skip("formula premises fail");
    }
    const int x2 = c.val(lex_product(it.g, *it.h).graph, K::double_domination);
    return verdict(f.value() == x2, kv("gx2(GoH)", x2), std::to_string(f.value()) + " (" + f.source + ")");
}

Outcome v15_small_values(const CorpusItem& it, const Ctx& c) {
    if (it.g.order() < 2 || it.h->order() < 2) return skip("trivial factor");
    if (has_isolated_vertex(it.g) && has_isolated_vertex(*it.h)) return skip("product has an isolated vertex");
    const int x2 = c.val(lex_product(it.g, *it.h).graph, K::double_domination);
    const auto cls = classify_small_value(it.g, *it.h, c.oracle);
    const bool ok = (x2 == 2) == (cls.value == SmallValue::two) && (x2 == 3) == (cls.value == SmallValue::three);
    return verdict(ok, kv("gx2(GoH)", x2), "classified " + to_string(cls.value));
}

bool is_canonical_path(const CorpusItem& it) {
    if (it.g_spec) return it.g_spec->kind == FamilyKind::path;
    return it.g == path_graph(it.g.order());
}

Outcome v16_projection(const CorpusItem& it, const Ctx& c) {
    if (auto s = pair_premise(it)) return *s;
    if (!is_connected(it.g)) return skip("G is not connected");
    const int gh = c.val(*it.h, K::domination);
    if (gh < 2) return skip("g(H) = 1");
    const int n = it.g.order();
    const bool end_pattern = gh >= 3 && n >= 6 && is_canonical_path(it);

    auto p = lex_product(it.g, *it.h);
    std::string violation;
    bool pattern_found = false;
    for_each_optimal_witness(p.graph, K::double_domination, [&](const Witness& w) {
        const auto prof = projection_profile(std::get<VertexSet>(w), p.index);
        if (prof.max_count() > 2) return true;
        for (int x = 0; x < n; ++x) {
            int around = 0;
            for (Bits b = it.g.neighbors(x); b; b &= b - 1) around += prof.counts[std::countr_zero(b)];
            const int need = (gh >= 3 || prof.counts[x] <= 1) ? 2 : 1;
            if (around < need) {
                violation = "set " + to_string(std::get<VertexSet>(w)) + ": copy " + std::to_string(x) + " sees " +
                            std::to_string(around) + " in neighbouring copies";
                return false;
            }
        }
        if (end_pattern && prof.counts[n - 1] == 0 && prof.counts[n - 4] == 0 && prof.counts[n - 2] >= 2 &&
            prof.counts[n - 3] >= 2)
            pattern_found = true;
        return true;
    });
    if (!violation.empty()) return fail(violation, "neighbouring copies carry at least 2 (1 for a doubly hit copy when g(H) = 2)");
    if (end_pattern && !pattern_found)
        return fail("no minimum set ends with the pattern", "a minimum set with last copy and copy n-3 empty, copies n-1 and n-2 doubly hit");
    return {};
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"V1", "inequality chain gt <= gtr2 <= gtr <= 2gt, gtr2 <= gx2", Scope::single, Cap::product, v1_chain},
        {"V2", "gx2 = gt forces every minimum double dominating set to induce a matching", Scope::single, Cap::product, v2_matching},
        {"V3", "gtr2 = 2gt iff gtr2 = gtr and gt = g", Scope::single, Cap::product, v3_twice_total},
        {"V4", "gx2 = 2 iff gtr2 = 2 iff two universal vertices", Scope::single, Cap::product, v4_value_two},
        {"V5", "gx2 does not drop on spanning subgraphs", Scope::single, Cap::product, v5_spanning},
        {"V6", "gx2(GoH) = gtr2(GoH)", Scope::pair, Cap::product, v6_equality},
        {"V7", "max(gt(G), 2rho(G)) <= gx2(GoH) <= 2gt(G)", Scope::pair, Cap::product, v7_bounds},
        {"V8", "gx2(GoH) = 2gt(G) characterization", Scope::pair, Cap::product, v8_twice_total_lex},
        {"V9", "gx2(GoH) <= 2 floor(2n/3) for connected G", Scope::pair, Cap::product, v9_order_bound},
        {"V10", "some minimum set meets each copy at most twice", Scope::pair, Cap::reduced, v10_two_per_copy},
        {"V11", "bounds from the universal vertices and domination number of H", Scope::pair, Cap::product, v11_conditions_h},
        {"V12", "equalities when gtr2(G) meets a lower bound", Scope::pair, Cap::product, v12_consequences},
        {"V13", "double total domination upper bounds", Scope::pair, Cap::product, v13_double_total},
        {"V14", "closed formulas for named families", Scope::pair, Cap::product, v14_formulas},
        {"V15", "classification of values 2 and 3", Scope::pair, Cap::product, v15_small_values},
        {"V16", "projection counts of minimum sets", Scope::pair, Cap::structural, v16_projection},
    };
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& d : registry())
        if (d.id == id) return d;
    throw std::invalid_argument("unknown check id '" + id + "' (expected V1..V16)");
}

// ---------------------------------------------------------------------------------------------
// Corpus helpers

void add_labeled_pairs(CorpusSpec& c, const CorpusConfig& cfg) {
    std::vector<Graph> hs;
    for (int n = 2; n <= cfg.h_max; ++n)
        for (auto& h : enumerate_labeled_graphs(n, {}, std::max(cfg.h_max, kDefaultEnumerationCap))) hs.push_back(h);
    for (int n = 2; n <= cfg.g_max; ++n)
        for (auto& g : enumerate_labeled_graphs(n, predicates::no_isolated_vertex, std::max(cfg.g_max, kDefaultEnumerationCap))) {
            auto spec = detect_family(g);
            for (const auto& h : hs) c.pairs.push_back({g, h, spec});
        }
}

void add_grid(CorpusSpec& c, const CorpusConfig& cfg) {
    std::vector<Graph> pool;
    for (const auto& s : cfg.h_pool) pool.push_back(graph_from_argument(s));
    std::vector<FamilySpec> gs;
    for (int n = cfg.grid_n_min; n <= cfg.grid_n_max; ++n) {
        gs.push_back({FamilyKind::path, {n}});
        gs.push_back({FamilyKind::cycle, {n}});
    }
    for (const char* extra : {"complete:3", "complete:4", "star:1,3", "star:1,4", "dstar:2,2", "dstar:2,3", "cbip:2,2",
                              "cbip:2,3", "cbip:3,3"})
        gs.push_back(parse_family_spec(extra));
    for (const auto& spec : gs) {
        auto g = family(spec);
        for (const auto& h : pool)
            if (g.order() * h.order() <= c.product_cap) c.pairs.push_back({g, h, spec});
    }
}

CorpusSpec empty_corpus(const std::string& name, const CorpusConfig& cfg) {
    CorpusSpec c;
    c.name = name;
    c.product_cap = cfg.product_cap;
    c.reduced_cap = std::min(cfg.reduced_cap, cfg.product_cap);
    c.structural_cap = cfg.structural_cap;
    if (cfg.product_cap > kMaxVertices) throw std::invalid_argument("product cap exceeds " + std::to_string(kMaxVertices));
    return c;
}

int cap_for(const CheckDef& d, const CorpusSpec& c) {
    switch (d.cap) {
        case Cap::reduced: return c.reduced_cap;
        case Cap::structural: return c.structural_cap;
        default: return c.product_cap;
    }
}

// Equal-size block partitions of {0..n-1}; visit returns true to stop.
bool for_each_block_partition(int n, int b, std::vector<int>& block_of, int next_block,
                              const std::function<bool(const std::vector<int>&)>& visit) {
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (block_of[v] < 0) {
            first = v;
            break;
        }
    if (first < 0) return visit(block_of);
    std::vector<int> rest;
    for (int v = first + 1; v < n; ++v)
        if (block_of[v] < 0) rest.push_back(v);
    // choose b-1 companions from rest
    std::vector<int> pick(b - 1);
    std::function<bool(int, int)> choose = [&](int start, int k) -> bool {
        if (k == b - 1) {
            block_of[first] = next_block;
            for (int v : pick) block_of[v] = next_block;
            const bool stop = for_each_block_partition(n, b, block_of, next_block + 1, visit);
            block_of[first] = -1;
            for (int v : pick) block_of[v] = -1;
            return stop;
        }
        for (int i = start; i + (b - 1 - k) <= static_cast<int>(rest.size()); ++i) {
            pick[k] = rest[i];
            if (choose(i + 1, k + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.order());
    for (int i = 0; i < a.order(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                ok = a.has_edge(u, v) == b.has_edge(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Config

void apply_config_text(CorpusConfig& cfg, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "corpus" || key == "source") cfg.source = value;
        else if (key == "single_max") cfg.single_max = parse_int(key, value);
        else if (key == "g_max") cfg.g_max = parse_int(key, value);
        else if (key == "h_max") cfg.h_max = parse_int(key, value);
        else if (key == "grid") cfg.grid = parse_bool(key, value);
        else if (key == "grid_n_min") cfg.grid_n_min = parse_int(key, value);
        else if (key == "grid_n_max") cfg.grid_n_max = parse_int(key, value);
        else if (key == "cap" || key == "product_cap") cfg.product_cap = parse_int(key, value);
        else if (key == "reduced_cap") cfg.reduced_cap = parse_int(key, value);
        else if (key == "structural_cap") cfg.structural_cap = parse_int(key, value);
        else if (key == "workers") cfg.workers = parse_int(key, value);
        else if (key == "h_pool") {
            cfg.h_pool.clear();
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ';'))
                if (!trim(item).empty()) cfg.h_pool.push_back(trim(item));
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (cfg.product_cap < 1 || cfg.product_cap > kMaxVertices)
        throw std::invalid_argument("cap must be in 1.." + std::to_string(kMaxVertices));
}

void apply_config_file(CorpusConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str());
}

// ---------------------------------------------------------------------------------------------
// Corpora

std::optional<FamilySpec> detect_family(const Graph& g) {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    std::vector<FamilySpec> candidates;
    if (n >= 3) candidates.push_back({FamilyKind::complete, {n}});
    if (n >= 3) candidates.push_back({FamilyKind::cycle, {n}});
    candidates.push_back({FamilyKind::path, {n}});
    candidates.push_back({FamilyKind::star, {n - 1}});
    for (int n1 = 1; n1 + 2 < n; ++n1) candidates.push_back({FamilyKind::double_star, {n1, n - 2 - n1}});
    for (int n1 = 1; n1 < n; ++n1) candidates.push_back({FamilyKind::complete_bipartite, {n1, n - n1}});
    for (const auto& spec : candidates) {
        try {
            spec.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (family(spec) == g) return spec;
    }
    return std::nullopt;
}

CorpusSpec build_corpus(const CorpusConfig& cfg) {
    if (cfg.source == "empty") return empty_corpus("empty", cfg);
    if (cfg.source != "default") return graph6_corpus(cfg.source, cfg);
    auto c = empty_corpus("default", cfg);
    for (int n = 2; n <= cfg.single_max; ++n)
        for (auto& g : enumerate_labeled_graphs(n, predicates::no_isolated_vertex, std::max(cfg.single_max, kDefaultEnumerationCap)))
            c.singles.push_back({g, std::nullopt, std::nullopt});
    add_labeled_pairs(c, cfg);
    if (cfg.grid) add_grid(c, cfg);
    return c;
}

CorpusSpec graph6_corpus(const std::string& path, const CorpusConfig& cfg) {
    auto c = empty_corpus(path, cfg);
    auto graphs = read_graph6_file(path);
    for (const auto& g : graphs) c.singles.push_back({g, std::nullopt, detect_family(g)});
    for (const auto& g : graphs) {
        auto spec = detect_family(g);
        for (const auto& h : graphs) c.pairs.push_back({g, h, spec});
    }
    return c;
}

CorpusSpec replay_corpus(const Graph& g, const std::optional<Graph>& h, const CorpusConfig& cfg) {
    auto c = empty_corpus("replay", cfg);
    c.reduced_cap = c.structural_cap = c.product_cap;
    c.singles.push_back({g, std::nullopt, detect_family(g)});
    if (h) c.pairs.push_back({g, *h, detect_family(g)});
    return c;
}

// ---------------------------------------------------------------------------------------------
// Running

std::size_t CheckReport::skipped_total() const {
    std::size_t total = 0;
    for (const auto& [reason, count] : skipped) total += count;
    return total;
}

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& d : registry()) ids.emplace_back(d.id);
    return ids;
}

std::string check_title(const std::string& id) { return find_check(id).title; }

int default_workers() {
    if (const char* env = std::getenv("LEXDOM_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CheckReport run_check(const std::string& id, const CorpusSpec& corpus, const RunOptions& options) {
    const auto& def = find_check(id);
    if (corpus.product_cap > kMaxVertices) throw std::invalid_argument("product cap exceeds " + std::to_string(kMaxVertices));
    const auto start = std::chrono::steady_clock::now();
    const InvariantOracle& oracle = options.oracle ? *options.oracle : default_oracle();
    const Ctx ctx{oracle, corpus};
    const auto& items = def.scope == Scope::single ? corpus.singles : corpus.pairs;
    const int cap = cap_for(def, corpus);

    std::vector<Outcome> outcomes(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            const auto& it = items[i];
            if (def.scope == Scope::pair && it.g.order() * it.h->order() > cap) {
                outcomes[i] = skip("product order exceeds cap " + std::to_string(cap));
                continue;
            }
            try {
                outcomes[i] = def.fn(it, ctx);
            } catch (const std::exception& e) {
                outcomes[i] = fail(std::string("error: ") + e.what(), "no error");
            }
        }
    };
    const int workers = std::max(1, std::min<int>(options.workers > 0 ? options.workers : default_workers(),
                                                  static_cast<int>(std::max<std::size_t>(items.size(), 1))));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    CheckReport r;
    r.id = def.id;
    r.title = def.title;
    r.generated = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.kind == Outcome::skip) {
            ++r.skipped[o.reason];
            continue;
        }
        ++r.tested;
        if (o.kind == Outcome::fail)
            r.counterexamples.push_back({write_graph6(items[i].g), items[i].h ? write_graph6(*items[i].h) : std::string(),
                                         o.observed, o.expected});
    }
    std::stable_sort(r.counterexamples.begin(), r.counterexamples.end(),
                     [](const Counterexample& a, const Counterexample& b) { return std::tie(a.g, a.h) < std::tie(b.g, b.h); });
    if (r.tested == 0) r.warnings.emplace_back("SKIPPED-ALL: no corpus item met the premises");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckReport> run_all(const CorpusSpec& corpus, const RunOptions& options) {
    std::vector<CheckReport> out;
    for (const auto& id : check_ids()) out.push_back(run_check(id, corpus, options));
    return out;
}

// ---------------------------------------------------------------------------------------------
// Hunting

std::optional<std::pair<Graph, Graph>> lex_factorization(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw std::invalid_argument("lex_factorization is limited to order 12");
    for (int b = 2; b * 2 <= n; ++b) {
        if (n % b) continue;
        std::optional<std::pair<Graph, Graph>> found;
        std::vector<int> block_of(n, -1);
        for_each_block_partition(n, b, block_of, 0, [&](const std::vector<int>& part) {
            const int a = n / b;
            std::vector<Bits> blocks(a, 0);
            for (int v = 0; v < n; ++v) blocks[part[v]] |= bit(v);
            std::vector<Edge> quotient;
            for (int i = 0; i < a; ++i)
                for (int j = i + 1; j < a; ++j) {
                    int cross = 0;
                    for (Bits x = blocks[i]; x; x &= x - 1) cross += std::popcount(g.neighbors(std::countr_zero(x)) & blocks[j]);
                    if (cross == b * b) quotient.emplace_back(i, j);
                    else if (cross != 0) return false;
                }
            const Graph h = g.induced(VertexSet(blocks[0]));
            for (int i = 1; i < a; ++i)
                if (!isomorphic_small(h, g.induced(VertexSet(blocks[i])))) return false;
            found.emplace(Graph::from_edges(a, quotient), h);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::vector<HuntHit> hunt_equality(const std::vector<Graph>& graphs, const InvariantOracle& oracle) {
    std::vector<HuntHit> hits;
    for (const auto& g : graphs) {
        auto x2 = oracle.value(g, K::double_domination);
        auto tr2 = oracle.value(g, K::total_roman2);
        if (!x2 || !tr2 || *x2 != *tr2) continue;
        HuntHit hit{g, *x2, std::nullopt};
        if (g.order() <= 12) hit.factors = lex_factorization(g);
        hits.push_back(std::move(hit));
    }
    return hits;
}

// ---------------------------------------------------------------------------------------------
// Reports

ReportFormat parse_report_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "markdown" || name == "md") return ReportFormat::markdown;
    throw std::invalid_argument("unknown report format '" + name + "' (json, csv, markdown)");
}

std::vector<GridCell> formula_grid(int n_min, int n_max, const std::vector<std::string>& h_specs, int product_cap,
                                   const InvariantOracle& oracle) {
    std::vector<GridCell> cells;
    for (auto kind : {FamilyKind::path, FamilyKind::cycle})
        for (int n = std::max(3, n_min); n <= n_max; ++n)
            for (const auto& hs : h_specs) {
                FamilySpec gs{kind, {n}};
                const Graph h = graph_from_argument(hs);
                if (n * h.order() > product_cap) continue;
                GridCell cell;
                cell.g = gs.to_string();
                cell.h = hs;
                cell.gamma_h = oracle.require(h, K::domination);
                cell.oracle = oracle.require(lex_product(family(gs), h).graph, K::double_domination);
                cell.formula = gamma_x2_lex_formula(gs, h, oracle).value();
                cells.push_back(cell);
            }
    return cells;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string fixed3(double x) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(3);
    o << x;
    return o.str();
}

}  // namespace

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format, const std::vector<GridCell>& grid) {
    std::size_t failed = 0;
    for (const auto& r : reports) failed += !r.passed();

    if (format == ReportFormat::json) {
        using nlohmann::ordered_json;
        ordered_json checks = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json skipped = ordered_json::object();
            for (const auto& [reason, count] : r.skipped) skipped[reason] = count;
            ordered_json ces = ordered_json::array();
            for (const auto& ce : r.counterexamples)
                ces.push_back({{"g", ce.g}, {"h", ce.h}, {"observed", ce.observed}, {"expected", ce.expected}});
            checks.push_back({{"id", r.id},
                              {"title", r.title},
                              {"verdict", r.passed() ? "pass" : "fail"},
                              {"generated", r.generated},
                              {"tested", r.tested},
                              {"skipped", r.skipped_total()},
                              {"skip_reasons", skipped},
                              {"counterexamples", ces},
                              {"warnings", r.warnings},
                              {"seconds", r.seconds}});
        }
        ordered_json doc = {{"checks", checks},
                            {"summary", {{"checks", reports.size()}, {"passed", reports.size() - failed}, {"failed", failed}}}};
        if (!grid.empty()) {
            ordered_json cells = ordered_json::array();
            for (const auto& c : grid)
                cells.push_back({{"g", c.g}, {"h", c.h}, {"gamma_h", c.gamma_h}, {"oracle", c.oracle}, {"formula", c.formula}});
            doc["grid"] = cells;
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << "id,title,verdict,generated,tested,skipped,counterexamples,seconds\n";
        for (const auto& r : reports)
            out << r.id << ',' << csv_field(r.title) << ',' << (r.passed() ? "pass" : "fail") << ',' << r.generated << ','
                << r.tested << ',' << r.skipped_total() << ',' << r.counterexamples.size() << ',' << fixed3(r.seconds) << '\n';
        return out.str();
    }

    out << "# Verification report\n\n";
    out << "| check | statement | verdict | tested | skipped | counterexamples | seconds |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports)
        out << "| " << r.id << " | " << r.title << " | " << (r.passed() ? "pass" : "**fail**") << " | " << r.tested << " | "
            << r.skipped_total() << " | " << r.counterexamples.size() << " | " << fixed3(r.seconds) << " |\n";
    for (const auto& r : reports) {
        if (r.passed()) continue;
        out << "\n## " << r.id << " counterexamples\n\n| G | H | observed | expected |\n|---|---|---|---|\n";
        for (const auto& ce : r.counterexamples)
            out << "| `" << ce.g << "` | `" << ce.h << "` | " << ce.observed << " | " << ce.expected << " |\n";
    }
    if (!grid.empty()) {
        std::vector<std::string> hs;
        for (const auto& c : grid)
            if (std::find(hs.begin(), hs.end(), c.h) == hs.end()) hs.push_back(c.h);
        for (const char* fam : {"path", "cycle"}) {
            out << "\n## gx2 of " << fam << " o H (oracle / formula)\n\n| n |";
            for (const auto& h : hs) {
                int gh = 0;
                for (const auto& c : grid)
                    if (c.h == h) gh = c.gamma_h;
                out << ' ' << h << " (g(H)" << (gh >= 3 ? ">=3" : "=" + std::to_string(gh)) << ") |";
            }
            out << "\n|---|";
            for (std::size_t i = 0; i < hs.size(); ++i) out << "---|";
            out << '\n';
            std::vector<std::string> rows;
            for (const auto& c : grid)
                if (c.g.rfind(fam, 0) == 0 && std::find(rows.begin(), rows.end(), c.g) == rows.end()) rows.push_back(c.g);
            for (const auto& row : rows) {
                out << "| " << row.substr(row.find(':') + 1) << " |";
                for (const auto& h : hs) {
                    auto it = std::find_if(grid.begin(), grid.end(), [&](const GridCell& c) { return c.g == row && c.h == h; });
                    if (it == grid.end()) out << " - |";
                    else out << ' ' << it->oracle << " / " << it->formula << (it->oracle == it->formula ? "" : " **!**") << " |";
                }
                out << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace lexdom
