#pragma once

// Brute-force reference values for the invariants, written directly from the definitions with
// plain loops over has_edge. Test-only; shares nothing with the library's search code.

#include <cstdint>
#include <optional>
#include <vector>

#include "lexdom/graph.hpp"
#include "lexdom/invariants.hpp"

namespace naive {

using lexdom::Graph;
using lexdom::InvariantKind;

inline bool adjacent(const Graph& g, int u, int v) { return u != v && g.has_edge(u, v); }

inline bool set_ok(const Graph& g, InvariantKind kind, std::uint64_t s) {
    const int n = g.order();
    auto in = [&](int v) { return ((s >> v) & 1U) != 0; };
    if (kind == InvariantKind::two_packing) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (!in(u) || !in(v)) continue;
                for (int w = 0; w < n; ++w) {
                    const bool near_u = (w == u) || adjacent(g, u, w);
                    const bool near_v = (w == v) || adjacent(g, v, w);
                    if (near_u && near_v) return false;
                }
            }
        return true;
    }
    for (int v = 0; v < n; ++v) {
        int open = 0;
        for (int u = 0; u < n; ++u)
            if (in(u) && adjacent(g, u, v)) ++open;
        const int closed = open + (in(v) ? 1 : 0);
        switch (kind) {
            case InvariantKind::domination:
                if (closed < 1) return false;
                break;
            case InvariantKind::total_domination:
                if (open < 1) return false;
                break;
            case InvariantKind::double_domination:
                if (closed < 2) return false;
                break;
            case InvariantKind::double_total:
                if (open < 2) return false;
                break;
            default: return false;
        }
    }
    return true;
}

inline bool function_ok(const Graph& g, InvariantKind kind, const std::vector<int>& f) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        bool positive_neighbour = false, two_neighbour = false;
        int sum = 0;
        for (int u = 0; u < n; ++u) {
            if (!adjacent(g, u, v)) continue;
            sum += f[u];
            positive_neighbour |= f[u] > 0;
            two_neighbour |= f[u] == 2;
        }
        if (!positive_neighbour) return false;
        if (f[v] == 0) {
            if (kind == InvariantKind::total_roman && !two_neighbour) return false;
            if (kind == InvariantKind::total_roman2 && sum < 2) return false;
        }
    }
    return true;
}

/// Optimal value by exhaustive scan, or nullopt when no witness exists.
inline std::optional<int> value(const Graph& g, InvariantKind kind) {
    const int n = g.order();
    if (kind == InvariantKind::total_roman || kind == InvariantKind::total_roman2) {
        std::optional<int> best;
        std::vector<int> f(n, 0);
        long total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (long code = 0; code < total; ++code) {
            long c = code;
            int w = 0;
            for (int v = 0; v < n; ++v) {
                f[v] = static_cast<int>(c % 3);
                c /= 3;
                w += f[v];
            }
            if ((!best || w < *best) && function_ok(g, kind, f)) best = w;
        }
        return best;
    }
    const bool maximise = kind == InvariantKind::two_packing;
    std::optional<int> best;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int size = 0;
        for (int v = 0; v < n; ++v) size += (s >> v) & 1U;
        if (best && (maximise ? size <= *best : size >= *best)) continue;
        if (set_ok(g, kind, s)) best = size;
    }
    return best;
}

/// All optimal set witnesses (set kinds only).
inline std::vector<std::uint64_t> optimal_sets(const Graph& g, InvariantKind kind) {
    auto target = value(g, kind);
    std::vector<std::uint64_t> out;
    if (!target) return out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        int size = 0;
        for (int v = 0; v < g.order(); ++v) size += (s >> v) & 1U;
        if (size == *target && set_ok(g, kind, s)) out.push_back(s);
    }
    return out;
}

}  // namespace naive
