#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexdom/families.hpp"
#include "lexdom/graph.hpp"
#include "lexdom/oracle.hpp"

namespace lexdom {

/// A premise of a formula was checked against the oracle and does not hold.
class PremiseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One applicable bound, with the rule that produced it and the premise that enabled it.
struct BoundTerm {
    std::string source;
    std::string premise;
    int value = 0;
};

/// Result of a closed formula (lower == upper) or an interval bound.
struct FormulaResult {
    int lower = 0;
    int upper = 0;
    std::string source;
    std::vector<std::string> assumptions;  // premises verified by the oracle
    std::vector<BoundTerm> lower_terms;
    std::vector<BoundTerm> upper_terms;

    bool exact() const { return lower == upper; }
    /// The exact value; throws std::logic_error for a proper interval.
    int value() const;
    bool contains(int x) const { return lower <= x && x <= upper; }
};

// Closed forms on paths and cycles.

/// gamma_x2(P_n) = 2*ceil(n/3) + 1 if n = 0 mod 3, else 2*ceil(n/3). Needs n >= 2.
int gamma_x2_path(int n);
/// gamma_x2(C_n) = ceil(2n/3). Needs n >= 3.
int gamma_x2_cycle(int n);
/// gamma_t(P_n) = gamma_t(C_n): n/2, (n+1)/2 or n/2 + 1 by n mod 4. Needs n >= 3.
int gamma_t_path_or_cycle(int n);

// Domination and total domination of G o H from factor invariants.

FormulaResult gamma_lex(const Graph& g, const Graph& h, const InvariantOracle& oracle = default_oracle());
FormulaResult gamma_t_lex(const Graph& g, const Graph& h, const InvariantOracle& oracle = default_oracle());

/// Intersection of every applicable bound on gamma_x2(G o H), each recorded with its premise.
FormulaResult gamma_x2_lex_bounds(const Graph& g, const Graph& h, const InvariantOracle& oracle = default_oracle());

enum class SmallValue { two, three, four_or_more };

/// Conditions under which gamma_x2(G o H) = 3.
enum class SmallValueCase { i = 1, ii, iii, iv, v, vi };

std::string to_string(SmallValue v);
std::string to_string(SmallValueCase c);

struct SmallValueClass {
    SmallValue value = SmallValue::four_or_more;
    /// First matching case when value == three.
    std::optional<SmallValueCase> matched;
    /// Every matching case (the conditions overlap).
    std::vector<SmallValueCase> all_matches;
};

/// Classifies gamma_x2(G o H) into {2, 3, >=4} from factor invariants. G and H nontrivial.
SmallValueClass classify_small_value(const Graph& g, const Graph& h, const InvariantOracle& oracle = default_oracle());

/// Premise check for a single case of the value-3 characterization.
bool small_value_case_holds(const Graph& g, const Graph& h, SmallValueCase c,
                            const InvariantOracle& oracle = default_oracle());

/// Exact gamma_x2(G o H) for a family G (path, cycle, complete, star, double star, complete
/// bipartite) dispatching on the regime of H. Throws std::invalid_argument for an unsupported
/// family and PremiseError when H does not meet the formula's premises.
FormulaResult gamma_x2_lex_formula(const FamilySpec& g, const Graph& h, const InvariantOracle& oracle = default_oracle());

/// Both sides of: gamma_x2(G o H) = 2 gamma_t(G)  <=>
///   gamma_x2(G o H) = gamma_tR(G o H) and (gamma_t(G) = gamma(G) or gamma(H) >= 2),
/// each evaluated independently from oracle values.
struct TwiceTotalEquivalence {
    bool lhs = false;
    bool rhs = false;
    int gamma_x2_product = 0;
    int gamma_tr_product = 0;
    int gamma_t_g = 0;
    int gamma_g = 0;
    int gamma_h = 0;
};

TwiceTotalEquivalence check_2gamma_t_equivalence(const Graph& g, const Graph& h,
                                                 const InvariantOracle& oracle = default_oracle());

}  // namespace lexdom
