#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lexdom/formulas.hpp"
#include "lexdom/graph.hpp"
#include "lexdom/invariants.hpp"
#include "lexdom/product.hpp"

namespace lexdom {

/// A construction produced something that fails validation. Never expected; raised instead of
/// returning an unchecked witness.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Per-copy dot counts for P_n o H when gamma(H) = 2: 2 = a dominating pair of H, 1 = one vertex.
/// Rows for n = 2..8 are fixed; longer paths concatenate P_7 blocks with a tail.
std::vector<int> path_scheme_row(int n);

/// Lexicographically smallest dominating 2-set of H, if any.
std::optional<VertexSet> smallest_dominating_pair(const Graph& h);

/// Double dominating set of P_n o H following the scheme row. dom_pair must dominate H;
/// single defaults to the smaller vertex of dom_pair.
VertexSet path_scheme_gamma2(int n, const Graph& h, std::optional<VertexSet> dom_pair = std::nullopt,
                             std::optional<int> single = std::nullopt);

/// Expected size of the scheme: n - floor(n/7) (+1 when n = 1, 2 mod 7).
int path_scheme_size(int n);

/// Double dominating set of size 3 in G o H for the named case of the value-3 characterization.
/// h_pair optionally fixes the gamma(H)-set used by cases (i) and (iii).
VertexSet small_value_witness(const Graph& g, const Graph& h, SmallValueCase c,
                              std::optional<VertexSet> h_pair = std::nullopt,
                              const InvariantOracle& oracle = default_oracle());

/// D x {y1, y2} for a minimum dominating set D of G (the smallest one unless given) and the two
/// smallest universal vertices y1 < y2 of H.
VertexSet two_universal_witness(const Graph& g, const Graph& h, std::optional<VertexSet> g_set = std::nullopt);

/// A minimum TR2DF of G placed on a universal vertex of H and zero elsewhere.
WeightFn universal_lift_witness(const Graph& g, const Graph& h);

/// The cycle vertices {0..k-1} of the H_k graph, a double total dominating set.
VertexSet hk_witness(int k, const std::vector<int>& sizes);

}  // namespace lexdom
