#include "lexdom/product.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lexdom {

VertexSet PairIndex::cross(VertexSet x, VertexSet y) const {
    VertexSet out;
    for (int u : x.members())
        for (int v : y.members()) out.insert(encode(u, v));
    return out;
}

LexProduct lex_product(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    if (ng < 1 || nh < 1) throw std::invalid_argument("lexicographic product needs nonempty factors");
    if (ng * nh > kMaxVertices)
        throw std::invalid_argument("product order " + std::to_string(ng * nh) + " exceeds " +
                                    std::to_string(kMaxVertices));
    PairIndex idx{ng, nh};
    std::vector<Bits> rows(ng * nh, 0);
    for (int u = 0; u < ng; ++u) {
        Bits across = 0;
        for (Bits b = g.neighbors(u); b != 0; b &= b - 1) across |= idx.block(std::countr_zero(b));
        for (int v = 0; v < nh; ++v) rows[idx.encode(u, v)] = across | (h.neighbors(v) << (u * nh));
    }
    return {Graph::from_adjacency(std::move(rows)), idx};
}

int ProjectionProfile::max_count() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

ProjectionProfile projection_profile(VertexSet s, const PairIndex& idx) {
    if (idx.size() < kMaxVertices && (s.bits() & ~low_bits(idx.size())))
        throw std::invalid_argument("set has labels outside the product");
    ProjectionProfile p;
    p.counts.resize(idx.ng);
    for (int u = 0; u < idx.ng; ++u) {
        const int c = std::popcount(s.bits() & idx.block(u));
        p.counts[u] = c;
        if (c >= 2) p.at_least_two.insert(u);
        else if (c == 1) p.exactly_one.insert(u);
        else p.none.insert(u);
    }
    return p;
}

}  // namespace lexdom
