#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexdom {

/// Hard limit on graph order, products included. One machine word per
/// neighbourhood.
inline constexpr int kMaxVertices = 64;

using Bits = std::uint64_t;

constexpr Bits bit(int v) { return Bits{1} << v; }

constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : (bit(n) - 1); }

/// Set of vertex labels in 0..63, stored as a single word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members) {
        for (int v : members) insert(v);
    }

    static VertexSet from_members(const std::vector<int>& members) {
        VertexSet s;
        for (int v : members) s.insert(v);
        return s;
    }
    static constexpr VertexSet all(int n) { return VertexSet(low_bits(n)); }

    constexpr Bits bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    void insert(int v) {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex label out of range");
        bits_ |= bit(v);
    }
    void erase(int v) { bits_ &= ~bit(v); }

    std::vector<int> members() const {
        std::vector<int> out;
        for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

private:
    Bits bits_ = 0;
};

/// Lexicographic comparison of sorted member lists (the canonical witness order).
bool lex_less(VertexSet a, VertexSet b);

std::string to_string(VertexSet s);

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs collapse; loops and
    /// out-of-range endpoints throw std::invalid_argument.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    /// Builds a graph from per-vertex neighbourhood words. The rows must be
    /// symmetric and loop-free.
    static Graph from_adjacency(std::vector<Bits> rows);

    int order() const { return static_cast<int>(adj_.size()); }
    Bits neighbors(int v) const { return adj_[v]; }
    Bits closed_neighbors(int v) const { return adj_[v] | bit(v); }
    Bits vertex_mask() const { return low_bits(order()); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int edge_count() const;
    std::vector<Edge> edges() const;
    const std::vector<Bits>& adjacency() const { return adj_; }

    Graph without_edge(int u, int v) const;
    Graph induced(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<Bits> adj) : adj_(std::move(adj)) {}
    std::vector<Bits> adj_;
};

VertexSet universal_vertices(const Graph& g);
bool has_isolated_vertex(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);
/// True iff the graph is a single edge (K2 = P2).
bool is_p2(const Graph& g);

}  // namespace lexdom
