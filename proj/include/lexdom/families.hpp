#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom {

enum class FamilyKind { path, cycle, complete, star, double_star, complete_bipartite, empty, family_hk };

/// A named graph family instance.
///
/// Parameters by kind:
///   path, cycle, complete, empty:  {n}
///   star:                          {r}       (K_{1,r}, center 0, leaves 1..r)
///   double_star:                   {n1, n2}  (centers 0 and 1, then leaves of 0, then leaves of 1)
///   complete_bipartite:            {n1, n2}  (parts 0..n1-1 and n1..n1+n2-1)
///   family_hk:                     {k, s_1, ..., s_k}
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<int> params;

    /// Order of the graph this spec builds.
    int order() const;
    /// Throws std::invalid_argument when the parameters are invalid for the kind.
    void validate() const;
    /// Canonical CLI string, e.g. "path:7", "hk:4:3,2,3,2", "dstar:2,3".
    std::string to_string() const;

    bool operator==(const FamilySpec&) const = default;
};

/// Parses a CLI family string. Accepted forms (an optional "family:" prefix is ignored):
///   path:N  cycle:N  complete:N  empty:N  star:R  star:1,R  dstar:N1,N2  cbip:N1,N2  hk:K:S1,..,SK
FamilySpec parse_family_spec(std::string_view text);

Graph family(const FamilySpec& spec);

inline Graph path_graph(int n) { return family({FamilyKind::path, {n}}); }
inline Graph cycle_graph(int n) { return family({FamilyKind::cycle, {n}}); }
inline Graph complete_graph(int n) { return family({FamilyKind::complete, {n}}); }
inline Graph empty_graph(int n) { return family({FamilyKind::empty, {n}}); }
inline Graph star_graph(int r) { return family({FamilyKind::star, {r}}); }

/// Rooted product: |V(G)| copies of H, copy i on labels i*|H|..i*|H|+|H|-1, with vertex i of G
/// identified with the root of copy i (label i*|H|+root).
Graph rooted_product(const Graph& g, const Graph& h, int root);

/// Reads a graph argument: either a family string (contains ':') or a graph6 line.
Graph graph_from_argument(std::string_view text);

}  // namespace lexdom
