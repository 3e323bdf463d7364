#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexdom/graph.hpp"

namespace lexdom {

enum class InvariantKind {
    domination,         // gamma
    total_domination,   // gamma_t
    double_domination,  // gamma_x2
    double_total,       // gamma_{2,t}
    two_packing,        // rho (a maximum)
    total_roman,        // gamma_tR
    total_roman2,       // gamma_t{R2}
};

inline constexpr InvariantKind kAllKinds[] = {
    InvariantKind::domination,   InvariantKind::total_domination, InvariantKind::double_domination,
    InvariantKind::double_total, InvariantKind::two_packing,      InvariantKind::total_roman,
    InvariantKind::total_roman2,
};

/// CLI short name: g, gt, gx2, g2t, rho, gtr, gtr2.
std::string_view kind_name(InvariantKind kind);
InvariantKind parse_kind(std::string_view name);
bool is_set_valued(InvariantKind kind);

/// f : V -> {0,1,2}.
class WeightFn {
public:
    WeightFn() = default;
    explicit WeightFn(std::vector<std::uint8_t> values) : values_(std::move(values)) {}
    static WeightFn zeros(int n) { return WeightFn(std::vector<std::uint8_t>(n, 0)); }

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int v) const { return values_[v]; }
    void set(int v, int value) { values_[v] = static_cast<std::uint8_t>(value); }
    const std::vector<std::uint8_t>& values() const { return values_; }

    /// V_i = {v : f(v) = i}.
    VertexSet level(int i) const;
    /// omega(f) = |V_1| + 2|V_2|.
    int weight() const;

    bool operator==(const WeightFn&) const = default;

private:
    std::vector<std::uint8_t> values_;
};

std::string to_string(const WeightFn& f);

using Witness = std::variant<VertexSet, WeightFn>;

/// Size of a set witness or weight of a function witness.
int witness_value(const Witness& w);

/// The invariant is undefined for the graph (e.g. a total-type invariant on a graph
/// with an isolated vertex). The message names the violated precondition.
class InfeasibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Precondition violated by (g, kind), or nullopt when the invariant is defined.
std::optional<std::string> infeasibility(const Graph& g, InvariantKind kind);

/// Definitional predicate for each kind. Returns false for a witness of the wrong shape
/// (a set for a function kind or vice versa, wrong size, labels out of range).
bool validate(const Graph& g, InvariantKind kind, const VertexSet& s);
bool validate(const Graph& g, InvariantKind kind, const WeightFn& f);
bool validate(const Graph& g, InvariantKind kind, const Witness& w);

/// Exact minimum (maximum for two_packing). Throws InfeasibleError.
int exact_invariant(const Graph& g, InvariantKind kind);

/// An optimal witness; ties broken towards the lexicographically smallest member list
/// (sets) or value vector (functions). Throws InfeasibleError.
Witness min_witness(const Graph& g, InvariantKind kind);

/// Calls `visit` once for every optimal witness until it returns false. Returns the number
/// of witnesses visited. Throws InfeasibleError.
std::size_t for_each_optimal_witness(const Graph& g, InvariantKind kind,
                                     const std::function<bool(const Witness&)>& visit);

/// Every optimal witness, each exactly once.
std::vector<Witness> enumerate_minimum_sets(const Graph& g, InvariantKind kind);

}  // namespace lexdom
