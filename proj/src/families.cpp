#include "lexdom/families.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "lexdom/graph6.hpp"

namespace lexdom {
namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

void need_count(const FamilySpec& s, std::size_t count, const char* name) {
    if (s.params.size() != count) bad(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto piece = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty())
            bad("malformed integer list '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string join(const std::vector<int>& xs, std::size_t from = 0) {
    std::string out;
    for (std::size_t i = from; i < xs.size(); ++i) {
        if (i > from) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

int FamilySpec::order() const {
    validate();
    switch (kind) {
        case FamilyKind::path:
        case FamilyKind::cycle:
        case FamilyKind::complete:
        case FamilyKind::empty: return params[0];
        case FamilyKind::star: return params[0] + 1;
        case FamilyKind::double_star: return params[0] + params[1] + 2;
        case FamilyKind::complete_bipartite: return params[0] + params[1];
        case FamilyKind::family_hk: return params[0] + std::accumulate(params.begin() + 1, params.end(), 0);
    }
    return 0;
}

void FamilySpec::validate() const {
    auto nonneg_order = [&](int lo, const char* name) {
        need_count(*this, 1, name);
        if (params[0] < lo) bad(std::string(name) + " needs n >= " + std::to_string(lo));
    };
    switch (kind) {
        case FamilyKind::path: nonneg_order(1, "path"); break;
        case FamilyKind::cycle: nonneg_order(3, "cycle"); break;
        case FamilyKind::complete: nonneg_order(1, "complete"); break;
        case FamilyKind::empty: nonneg_order(1, "empty"); break;
        case FamilyKind::star: nonneg_order(1, "star"); break;
        case FamilyKind::double_star:
            need_count(*this, 2, "double_star");
            if (params[0] < 1 || params[1] < 1) bad("double_star needs n1, n2 >= 1");
            break;
        case FamilyKind::complete_bipartite:
            need_count(*this, 2, "complete_bipartite");
            if (params[0] < 1 || params[1] < 1) bad("complete_bipartite needs n1, n2 >= 1");
            break;
        case FamilyKind::family_hk: {
            if (params.empty()) bad("family_hk needs k");
            const int k = params[0];
            if (k < 3) bad("family_hk needs k >= 3");
            if (static_cast<int>(params.size()) != k + 1) bad("family_hk needs exactly k block sizes");
            for (std::size_t i = 1; i < params.size(); ++i)
                if (params[i] < 1) bad("family_hk block sizes must be >= 1");
            break;
        }
    }
    // Order is checked without calling order() to avoid recursion.
    long total = 0;
    switch (kind) {
        case FamilyKind::star: total = params[0] + 1L; break;
        case FamilyKind::double_star: total = params[0] + params[1] + 2L; break;
        case FamilyKind::complete_bipartite: total = params[0] + static_cast<long>(params[1]); break;
        case FamilyKind::family_hk: total = std::accumulate(params.begin(), params.end(), 0L); break;
        default: total = params[0];
    }
    if (total > kMaxVertices) bad("family graph exceeds " + std::to_string(kMaxVertices) + " vertices");
}

std::string FamilySpec::to_string() const {
    switch (kind) {
        case FamilyKind::path: return "path:" + join(params);
        case FamilyKind::cycle: return "cycle:" + join(params);
        case FamilyKind::complete: return "complete:" + join(params);
        case FamilyKind::empty: return "empty:" + join(params);
        case FamilyKind::star: return "star:1," + join(params);
        case FamilyKind::double_star: return "dstar:" + join(params);
        case FamilyKind::complete_bipartite: return "cbip:" + join(params);
        case FamilyKind::family_hk: return "hk:" + std::to_string(params.at(0)) + ":" + join(params, 1);
    }
    return {};
}

FamilySpec parse_family_spec(std::string_view text) {
    if (text.starts_with("family:")) text.remove_prefix(7);
    auto colon = text.find(':');
    if (colon == std::string_view::npos) bad("family spec needs 'kind:params', got '" + std::string(text) + "'");
    auto name = text.substr(0, colon);
    auto rest = text.substr(colon + 1);

    FamilySpec spec;
    if (name == "hk") {
        auto second = rest.find(':');
        if (second == std::string_view::npos) bad("hk spec is hk:K:S1,..,SK");
        spec.kind = FamilyKind::family_hk;
        auto k = parse_int_list(rest.substr(0, second));
        if (k.size() != 1) bad("hk spec is hk:K:S1,..,SK");
        spec.params = k;
        for (int s : parse_int_list(rest.substr(second + 1))) spec.params.push_back(s);
    } else {
        auto values = parse_int_list(rest);
        if (name == "path" || name == "P") spec.kind = FamilyKind::path;
        else if (name == "cycle" || name == "C") spec.kind = FamilyKind::cycle;
        else if (name == "complete" || name == "K") spec.kind = FamilyKind::complete;
        else if (name == "empty" || name == "N") spec.kind = FamilyKind::empty;
        else if (name == "star") {
            spec.kind = FamilyKind::star;
            if (values.size() == 2) {
                if (values[0] != 1) bad("star spec is star:R or star:1,R");
                values.erase(values.begin());
            }
        } else if (name == "dstar") spec.kind = FamilyKind::double_star;
        else if (name == "cbip") spec.kind = FamilyKind::complete_bipartite;
        else bad("unknown family '" + std::string(name) + "'");
        spec.params = std::move(values);
    }
    spec.validate();
    return spec;
}

Graph family(const FamilySpec& spec) {
    spec.validate();
    const auto& p = spec.params;
    std::vector<Edge> edges;
    int n = 0;
    switch (spec.kind) {
        case FamilyKind::path:
            n = p[0];
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            break;
        case FamilyKind::cycle:
            n = p[0];
            for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            break;
        case FamilyKind::complete:
            n = p[0];
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case FamilyKind::empty: n = p[0]; break;
        case FamilyKind::star:
            n = p[0] + 1;
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            break;
        case FamilyKind::double_star: {
            n = p[0] + p[1] + 2;
            edges.emplace_back(0, 1);
            int next = 2;
            for (int i = 0; i < p[0]; ++i) edges.emplace_back(0, next++);
            for (int i = 0; i < p[1]; ++i) edges.emplace_back(1, next++);
            break;
        }
        case FamilyKind::complete_bipartite:
            n = p[0] + p[1];
            for (int u = 0; u < p[0]; ++u)
                for (int v = p[0]; v < n; ++v) edges.emplace_back(u, v);
            break;
        case FamilyKind::family_hk: {
            const int k = p[0];
            n = spec.order();
            for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
            int next = k;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < p[i + 1]; ++j, ++next) {
                    edges.emplace_back(next, i);
                    edges.emplace_back(next, (i + 1) % k);
                }
            break;
        }
    }
    return Graph::from_edges(n, edges);
}

Graph rooted_product(const Graph& g, const Graph& h, int root) {
    const int ng = g.order(), nh = h.order();
    if (ng < 1) bad("rooted product needs a nonempty G");
    if (nh < 2) bad("rooted product needs a nontrivial H");
    if (root < 0 || root >= nh) bad("root " + std::to_string(root) + " is not a vertex of H");
    if (ng * nh > kMaxVertices) bad("rooted product exceeds " + std::to_string(kMaxVertices) + " vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < ng; ++i)
        for (auto [a, b] : h.edges()) edges.emplace_back(i * nh + a, i * nh + b);
    for (auto [x, y] : g.edges()) edges.emplace_back(x * nh + root, y * nh + root);
    return Graph::from_edges(ng * nh, edges);
}

Graph graph_from_argument(std::string_view text) {
    if (text.find(':') != std::string_view::npos) return family(parse_family_spec(text));
    return parse_graph6(text);
}

}  // namespace lexdom
