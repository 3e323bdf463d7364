#include "lexdom/graph.hpp"

#include <algorithm>
#include <sstream>

namespace lexdom {

bool lex_less(VertexSet a, VertexSet b) {
    auto am = a.members();
    auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

std::string to_string(VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s.members()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 0.." + std::to_string(kMaxVertices));
    std::vector<Bits> adj(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<Bits> rows) {
    const int n = static_cast<int>(rows.size());
    if (n > kMaxVertices)
        throw std::invalid_argument("graph order exceeds " + std::to_string(kMaxVertices));
    const Bits mask = low_bits(n);
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~mask) throw std::invalid_argument("adjacency row references missing vertex");
        if (rows[v] & bit(v)) throw std::invalid_argument("loop edge at vertex " + std::to_string(v));
        for (Bits b = rows[v]; b != 0; b &= b - 1) {
            int u = std::countr_zero(b);
            if (!(rows[u] & bit(v))) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
    return Graph(std::move(rows));
}

int Graph::edge_count() const {
    int twice = 0;
    for (Bits row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (Bits b = adj_[u] & ~low_bits(u + 1); b != 0; b &= b - 1) out.emplace_back(u, std::countr_zero(b));
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    auto adj = adj_;
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
    return Graph(std::move(adj));
}

Graph Graph::induced(VertexSet s) const {
    auto members = s.members();
    std::vector<Bits> adj(members.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (has_edge(members[i], members[j])) adj[i] |= bit(static_cast<int>(j));
    return Graph(std::move(adj));
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    const Bits all = g.vertex_mask();
    for (int v = 0; v < g.order(); ++v)
        if (g.closed_neighbors(v) == all) out.insert(v);
    return out;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbors(v) == 0) return true;
    return false;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = kMaxVertices;
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    Bits seen = bit(0), frontier = bit(0);
    while (frontier != 0) {
        Bits next = 0;
        for (Bits b = frontier; b != 0; b &= b - 1) next |= g.neighbors(std::countr_zero(b));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

bool is_p2(const Graph& g) { return g.order() == 2 && g.has_edge(0, 1); }

}  // namespace lexdom
