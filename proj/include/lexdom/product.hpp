#pragma once

#include <utility>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom {

/// Row-major pair encoding (u, v) <-> u * nH + v for vertices of G o H.
/// The copy H_u occupies labels u*nH .. u*nH + nH - 1.
struct PairIndex {
    int ng = 0;
    int nh = 0;

    int size() const { return ng * nh; }
    int encode(int u, int v) const { return u * nh + v; }
    std::pair<int, int> decode(int label) const { return {label / nh, label % nh}; }
    /// All product labels of the copy H_u.
    Bits block(int u) const { return low_bits(nh) << (u * nh); }
    /// X x Y in product labels.
    VertexSet cross(VertexSet x, VertexSet y) const;

    bool operator==(const PairIndex&) const = default;
};

struct LexProduct {
    Graph graph;
    PairIndex index;
};

/// Lexicographic product: (u,v) ~ (x,y) iff ux in E(G), or u == x and vy in E(H).
/// Throws std::invalid_argument if either factor is empty or the product exceeds kMaxVertices.
LexProduct lex_product(const Graph& g, const Graph& h);

/// Per-copy counts c_u = |S cap V(H_u)| and the A/B/C partition of V(G).
struct ProjectionProfile {
    std::vector<int> counts;
    VertexSet at_least_two;  // A_S
    VertexSet exactly_one;   // B_S
    VertexSet none;          // C_S

    int max_count() const;
};

ProjectionProfile projection_profile(VertexSet s, const PairIndex& idx);

}  // namespace lexdom
