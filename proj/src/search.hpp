#pragma once

// Exact search engines behind the invariant solvers. Internal to the library.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom::detail {

/// Minimum set multicover: every vertex v needs |S cap need[v]| >= demand, where need[v] is
/// N[v] (closed) or N(v) (open). Covers gamma, gamma_t, gamma_x2 and gamma_{2,t}.
///
/// Depth-first search under a size budget. At each node an unmet constraint with the largest
/// residual need (ties: fewest remaining candidates) is branched on; branch i adds the i-th
/// remaining candidate and excludes the earlier ones, so the branches partition the space and
/// every minimal solution is reached at exactly one leaf. Constraints whose candidates are
/// all required are propagated without branching.
class CoverSearch {
public:
    CoverSearch(const Graph& g, bool closed, int demand);

    /// Is there a solution S with include ⊆ S, S ∩ exclude = ∅ and |S| <= k?
    bool exists(int k, Bits include = 0, Bits exclude = 0, Bits* witness = nullptr) const;
    /// Smallest feasible k, or nullopt if no solution exists.
    std::optional<int> minimum() const;
    /// Visits every minimal solution of size <= k until `visit` returns false.
    std::size_t enumerate(int k, const std::function<bool(Bits)>& visit) const;

private:
    template <class Leaf>
    bool dfs(Bits chosen, Bits excluded, int budget, Leaf& leaf) const;

    int n_;
    int demand_;
    std::vector<Bits> need_;    // need_[v]: vertices that count towards v
    std::vector<Bits> covers_;  // covers_[c]: constraints that c counts towards
};

enum class RomanRule {
    total_roman,   // V_1 ∪ V_2 total dominating; v in V_0 has a neighbour in V_2
    total_roman2,  // V_1 ∪ V_2 total dominating; v in V_0 has f(N(v)) >= 2
};

/// A partial assignment: values plus a frozen mask (frozen values may not be raised).
struct RomanState {
    Bits positive = 0;  // f(v) >= 1
    Bits two = 0;       // f(v) == 2
    Bits frozen = 0;
};

/// Minimum-weight total Roman / total Roman {2} functions.
///
/// Both rules are monotone: raising a value never breaks a satisfied vertex. The search keeps
/// a lower-bound assignment f; for an unsatisfied vertex v any solution above f must raise a
/// value in N[v], so branch i raises the i-th raisable candidate by one and freezes the
/// earlier ones. This partitions the solutions above f, so each minimal function is found once.
class RomanSearch {
public:
    RomanSearch(const Graph& g, RomanRule rule);

    bool exists(int w, const RomanState& start = {}, RomanState* witness = nullptr) const;
    std::optional<int> minimum() const;
    std::size_t enumerate(int w, const std::function<bool(const RomanState&)>& visit) const;

private:
    template <class Leaf>
    bool dfs(RomanState s, int budget, Leaf& leaf) const;
    bool satisfied(const RomanState& s, int v) const;

    const Graph& g_;
    RomanRule rule_;
};

/// Maximum clique by branch and bound with greedy colouring bounds.
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Bits> adjacency);

    int maximum() const;
    /// Is there a clique of size >= k containing `include` and avoiding `exclude`?
    bool exists(int k, Bits include = 0, Bits exclude = 0, Bits* witness = nullptr) const;
    /// Visits every clique of size exactly k until `visit` returns false.
    std::size_t enumerate(int k, const std::function<bool(Bits)>& visit) const;

private:
    template <class Leaf>
    bool expand(Bits clique, int size, Bits candidates, int target, Leaf& leaf) const;
    int colour_bound(Bits candidates, int limit) const;

    std::vector<Bits> adj_;
};

/// Compatibility graph for 2-packings: u ~ v iff N[u] ∩ N[v] = ∅.
std::vector<Bits> packing_compatibility(const Graph& g);

}  // namespace lexdom::detail
