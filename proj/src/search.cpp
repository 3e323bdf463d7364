#include "search.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace lexdom::detail {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Fewest picks from a multiset of per-pick gains (histogram by gain) whose total reaches
/// `demand`.
int picks_needed(const std::array<int, kMaxVertices + 2>& hist, int demand) {
    int picks = 0;
    for (int gain = kMaxVertices + 1; gain >= 1 && demand > 0; --gain) {
        const int available = hist[gain];
        if (available == 0) continue;
        const int take = std::min(available, (demand + gain - 1) / gain);
        picks += take;
        demand -= take * gain;
    }
    return demand > 0 ? kUnreachable : picks;
}

template <class F>
void for_each_bit(Bits b, F&& f) {
    for (; b != 0; b &= b - 1) f(std::countr_zero(b));
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// CoverSearch

CoverSearch::CoverSearch(const Graph& g, bool closed, int demand)
    : n_(g.order()), demand_(demand), need_(g.order()), covers_(g.order()) {
    for (int v = 0; v < n_; ++v) {
        need_[v] = closed ? g.closed_neighbors(v) : g.neighbors(v);
        // need is symmetric in (v, c), so the constraints c counts towards are need_[c].
        covers_[v] = need_[v];
    }
}

template <class Leaf>
bool CoverSearch::dfs(Bits chosen, Bits excluded, int budget, Leaf& leaf) const {
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n_; ++v) {
            const int have = std::popcount(need_[v] & chosen);
            if (have >= demand_) continue;
            const int residual = demand_ - have;
            const Bits avail = need_[v] & ~chosen & ~excluded;
            const int options = std::popcount(avail);
            if (options < residual) return false;
            if (options == residual) {
                chosen |= avail;
                budget -= options;
                if (budget < 0) return false;
                changed = true;
            }
        }
    }

    Bits unsat = 0;
    int total = 0, pick = -1, pick_residual = 0, pick_options = kUnreachable;
    for (int v = 0; v < n_; ++v) {
        const int have = std::popcount(need_[v] & chosen);
        if (have >= demand_) continue;
        const int residual = demand_ - have;
        const int options = std::popcount(need_[v] & ~chosen & ~excluded);
        unsat |= bit(v);
        total += residual;
        if (residual > pick_residual || (residual == pick_residual && options < pick_options)) {
            pick = v;
            pick_residual = residual;
            pick_options = options;
        }
    }
    if (unsat == 0) return leaf(chosen);
    if (budget <= 0) return false;

    std::array<int, kMaxVertices + 2> hist{};
    for_each_bit(low_bits(n_) & ~chosen & ~excluded,
                 [&](int c) { ++hist[std::popcount(covers_[c] & unsat)]; });
    if (picks_needed(hist, total) > budget) return false;

    Bits prior = 0;
    for (Bits b = need_[pick] & ~chosen & ~excluded; b != 0; b &= b - 1) {
        const Bits c = b & -b;
        if (dfs(chosen | c, excluded | prior, budget - 1, leaf)) return true;
        prior |= c;
    }
    return false;
}

bool CoverSearch::exists(int k, Bits include, Bits exclude, Bits* witness) const {
    if (include & exclude) return false;
    const int budget = k - std::popcount(include);
    if (budget < 0) return false;
    auto leaf = [&](Bits s) {
        if (witness) *witness = s;
        return true;
    };
    return dfs(include, exclude, budget, leaf);
}

std::optional<int> CoverSearch::minimum() const {
    for (int v = 0; v < n_; ++v)
        if (std::popcount(need_[v]) < demand_) return std::nullopt;
    for (int k = 0; k <= n_; ++k)
        if (exists(k)) return k;
    return std::nullopt;
}

std::size_t CoverSearch::enumerate(int k, const std::function<bool(Bits)>& visit) const {
    std::size_t count = 0;
    auto leaf = [&](Bits s) {
        ++count;
        return !visit(s);
    };
    dfs(Bits{0}, Bits{0}, k, leaf);
    return count;
}

// ---------------------------------------------------------------------------------------------
// RomanSearch

RomanSearch::RomanSearch(const Graph& g, RomanRule rule) : g_(g), rule_(rule) {}

bool RomanSearch::satisfied(const RomanState& s, int v) const {
    const Bits nb = g_.neighbors(v);
    if ((nb & s.positive) == 0) return false;
    if (s.positive & bit(v)) return true;
    if (rule_ == RomanRule::total_roman2) return std::popcount(nb & s.positive) + std::popcount(nb & s.two) >= 2;
    return (nb & s.two) != 0;
}

template <class Leaf>
bool RomanSearch::dfs(RomanState s, int budget, Leaf& leaf) const {
    const int n = g_.order();
    auto raisable = [&](int v) -> Bits {
        // Raise candidates that can help v: v itself (0 -> 1) and neighbours below 2, or, once
        // f(v) >= 1, neighbours at 0 (only total domination is missing).
        if (s.positive & bit(v)) return g_.neighbors(v) & ~s.positive & ~s.frozen;
        return ((bit(v) & ~s.frozen) | g_.neighbors(v)) & ~s.frozen & ~s.two;
    };
    auto raise = [&](int c) {
        if (s.positive & bit(c)) s.two |= bit(c);
        else s.positive |= bit(c);
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (satisfied(s, v)) continue;
            const Bits cand = raisable(v);
            if (cand == 0) return false;
            if ((cand & (cand - 1)) == 0) {
                if (--budget < 0) return false;
                raise(std::countr_zero(cand));
                changed = true;
            }
        }
    }

    Bits unsat = 0;
    int total = 0, pick = -1, pick_need = 0, pick_options = kUnreachable;
    for (int v = 0; v < n; ++v) {
        if (satisfied(s, v)) continue;
        const Bits nb = g_.neighbors(v);
        int need = 1;
        if (!(s.positive & bit(v)) && (s.frozen & bit(v))) {
            if (rule_ == RomanRule::total_roman2) {
                need = 2 - std::popcount(nb & s.positive) - std::popcount(nb & s.two);
            } else {
                need = (nb & s.positive & ~s.two & ~s.frozen) ? 1 : 2;
            }
        }
        const int options = std::popcount(raisable(v));
        unsat |= bit(v);
        total += need;
        if (need > pick_need || (need == pick_need && options < pick_options)) {
            pick = v;
            pick_need = need;
            pick_options = options;
        }
    }
    if (unsat == 0) return leaf(s);
    if (budget <= 0) return false;

    std::array<int, kMaxVertices + 2> hist{};
    for_each_bit(low_bits(n) & ~s.frozen & ~s.two, [&](int c) {
        int gain = std::popcount(g_.neighbors(c) & unsat);
        if ((unsat & bit(c)) && !(s.positive & bit(c))) ++gain;
        ++hist[gain];
    });
    if (picks_needed(hist, total) > budget) return false;

    const Bits cand = raisable(pick);
    Bits prior = 0;
    for (Bits b = cand; b != 0; b &= b - 1) {
        const int c = std::countr_zero(b);
        RomanState child = s;
        child.frozen |= prior;
        if (child.positive & bit(c)) child.two |= bit(c);
        else child.positive |= bit(c);
        if (dfs(child, budget - 1, leaf)) return true;
        prior |= bit(c);
    }
    return false;
}

bool RomanSearch::exists(int w, const RomanState& start, RomanState* witness) const {
    const int budget = w - std::popcount(start.positive) - std::popcount(start.two);
    if (budget < 0) return false;
    auto leaf = [&](const RomanState& s) {
        if (witness) *witness = s;
        return true;
    };
    return dfs(start, budget, leaf);
}

std::optional<int> RomanSearch::minimum() const {
    const int n = g_.order();
    for (int v = 0; v < n; ++v)
        if (g_.neighbors(v) == 0) return std::nullopt;
    for (int w = 0; w <= 2 * n; ++w)
        if (exists(w)) return w;
    return std::nullopt;
}

std::size_t RomanSearch::enumerate(int w, const std::function<bool(const RomanState&)>& visit) const {
    std::size_t count = 0;
    auto leaf = [&](const RomanState& s) {
        ++count;
        return !visit(s);
    };
    dfs(RomanState{}, w, leaf);
    return count;
}

// ---------------------------------------------------------------------------------------------
// CliqueSearch

CliqueSearch::CliqueSearch(std::vector<Bits> adjacency) : adj_(std::move(adjacency)) {}

int CliqueSearch::colour_bound(Bits candidates, int limit) const {
    int colours = 0;
    while (candidates != 0 && colours < limit) {
        ++colours;
        Bits uncoloured = candidates;
        while (uncoloured != 0) {
            const int v = std::countr_zero(uncoloured);
            candidates &= ~bit(v);
            uncoloured &= ~bit(v) & ~adj_[v];
        }
    }
    return candidates == 0 ? colours : limit + 1;
}

template <class Leaf>
bool CliqueSearch::expand(Bits clique, int size, Bits candidates, int target, Leaf& leaf) const {
    if (size >= target) return leaf(clique);
    const int missing = target - size;
    if (std::popcount(candidates) < missing) return false;
    if (colour_bound(candidates, missing) < missing) return false;
    while (candidates != 0) {
        const int v = std::countr_zero(candidates);
        candidates &= ~bit(v);
        if (expand(clique | bit(v), size + 1, candidates & adj_[v], target, leaf)) return true;
        if (std::popcount(candidates) < missing) return false;
    }
    return false;
}

bool CliqueSearch::exists(int k, Bits include, Bits exclude, Bits* witness) const {
    const int n = static_cast<int>(adj_.size());
    Bits candidates = low_bits(n) & ~include & ~exclude;
    bool ok = true;
    for_each_bit(include, [&](int v) {
        if ((include & ~bit(v)) & ~adj_[v]) ok = false;
        candidates &= adj_[v];
    });
    if (!ok || (include & exclude)) return false;
    auto leaf = [&](Bits c) {
        if (witness) *witness = c;
        return true;
    };
    return expand(include, std::popcount(include), candidates, k, leaf);
}

int CliqueSearch::maximum() const {
    int best = 0;
    while (exists(best + 1)) ++best;
    return best;
}

std::size_t CliqueSearch::enumerate(int k, const std::function<bool(Bits)>& visit) const {
    std::size_t count = 0;
    auto leaf = [&](Bits c) {
        ++count;
        return !visit(c);
    };
    expand(Bits{0}, 0, low_bits(static_cast<int>(adj_.size())), k, leaf);
    return count;
}

std::vector<Bits> packing_compatibility(const Graph& g) {
    const int n = g.order();
    std::vector<Bits> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (g.closed_neighbors(u) & g.closed_neighbors(v)) == 0) adj[u] |= bit(v);
    return adj;
}

}  // namespace lexdom::detail
