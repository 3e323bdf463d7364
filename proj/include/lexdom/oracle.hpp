#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "lexdom/graph.hpp"
#include "lexdom/invariants.hpp"

namespace lexdom {

/// Source of exact invariant values for formulas and checks. Abstract so a test can
/// substitute a deliberately wrong oracle and watch the checks catch it.
class InvariantOracle {
public:
    virtual ~InvariantOracle() = default;

    /// Exact value, or nullopt when the invariant is undefined for g.
    virtual std::optional<int> value(const Graph& g, InvariantKind kind) const = 0;

    /// Exact value; throws InfeasibleError when undefined.
    int require(const Graph& g, InvariantKind kind) const;
};

/// Solver-backed oracle with a thread-safe memo keyed by (graph6, kind).
class ExactOracle : public InvariantOracle {
public:
    std::optional<int> value(const Graph& g, InvariantKind kind) const override;
    std::size_t memo_size() const;

private:
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, std::optional<int>> memo_;
};

/// Wraps another oracle and shifts one invariant by `delta` on graphs of order >= min_order.
/// Used to check that the harness notices a wrong oracle.
class PerturbedOracle : public InvariantOracle {
public:
    PerturbedOracle(const InvariantOracle& inner, InvariantKind kind, int delta, int min_order)
        : inner_(inner), kind_(kind), delta_(delta), min_order_(min_order) {}
    std::optional<int> value(const Graph& g, InvariantKind kind) const override;

private:
    const InvariantOracle& inner_;
    InvariantKind kind_;
    int delta_;
    int min_order_;
};

/// Parses "KIND:DELTA:MIN_ORDER", e.g. "gtr2:1:8".
PerturbedOracle parse_perturbation(const std::string& text, const InvariantOracle& inner);

/// Process-wide oracle used by the overloads that do not take one.
const InvariantOracle& default_oracle();

/// The facts about a second factor H that the product formulas branch on.
struct FactorRegime {
    int order = 0;
    int gamma = 0;                        // gamma(H)
    int universal_count = 0;              // number of universal vertices
    bool two_universal() const { return universal_count >= 2; }  // gamma_x2(H) = 2
};

FactorRegime factor_regime(const Graph& h, const InvariantOracle& oracle = default_oracle());

}  // namespace lexdom
