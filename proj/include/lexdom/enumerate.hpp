#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom {

inline constexpr int kDefaultEnumerationCap = 6;

using GraphPredicate = std::function<bool(const Graph&)>;

/// Stream over all labeled graphs of a given order. Graph number `code` has edge k of the
/// upper triangle (pairs ordered (0,1),(0,2),(1,2),(0,3),...) iff bit k of `code` is set.
/// Re-creatable per worker; holds no shared state.
class LabeledGraphStream {
public:
    /// Throws std::invalid_argument when n < 1 or n > cap.
    explicit LabeledGraphStream(int n, GraphPredicate predicate = {}, int cap = kDefaultEnumerationCap);

    /// Next graph passing the predicate, or nullopt when exhausted.
    std::optional<Graph> next();

    std::uint64_t total_codes() const { return total_; }

private:
    int n_;
    GraphPredicate predicate_;
    std::vector<Edge> pairs_;
    std::uint64_t code_ = 0;
    std::uint64_t total_ = 0;
};

std::vector<Graph> enumerate_labeled_graphs(int n, const GraphPredicate& predicate = {},
                                            int cap = kDefaultEnumerationCap);

namespace predicates {
bool no_isolated_vertex(const Graph& g);
bool connected(const Graph& g);
}  // namespace predicates

}  // namespace lexdom
