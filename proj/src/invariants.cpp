#include "lexdom/invariants.hpp"

#include <sstream>

#include "search.hpp"

namespace lexdom {
namespace {

using detail::CliqueSearch;
using detail::CoverSearch;
using detail::RomanRule;
using detail::RomanSearch;
using detail::RomanState;

struct CoverShape {
    bool closed;
    int demand;
};

CoverShape cover_shape(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::domination: return {true, 1};
        case InvariantKind::total_domination: return {false, 1};
        case InvariantKind::double_domination: return {true, 2};
        case InvariantKind::double_total: return {false, 2};
        default: throw std::logic_error("not a cover invariant");
    }
}

RomanRule roman_rule(InvariantKind kind) {
    return kind == InvariantKind::total_roman ? RomanRule::total_roman : RomanRule::total_roman2;
}

WeightFn to_weight_fn(const RomanState& s, int n) {
    WeightFn f = WeightFn::zeros(n);
    for (int v = 0; v < n; ++v)
        if (s.positive & bit(v)) f.set(v, (s.two & bit(v)) ? 2 : 1);
    return f;
}

void require_feasible(const Graph& g, InvariantKind kind) {
    if (auto why = infeasibility(g, kind))
        throw InfeasibleError(std::string(kind_name(kind)) + " is undefined: " + *why);
}

}  // namespace

std::string_view kind_name(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::domination: return "g";
        case InvariantKind::total_domination: return "gt";
        case InvariantKind::double_domination: return "gx2";
        case InvariantKind::double_total: return "g2t";
        case InvariantKind::two_packing: return "rho";
        case InvariantKind::total_roman: return "gtr";
        case InvariantKind::total_roman2: return "gtr2";
    }
    return "?";
}

InvariantKind parse_kind(std::string_view name) {
    for (auto kind : kAllKinds)
        if (kind_name(kind) == name) return kind;
    throw std::invalid_argument("unknown invariant kind '" + std::string(name) +
                                "' (expected g, gt, gx2, g2t, rho, gtr, gtr2)");
}

bool is_set_valued(InvariantKind kind) {
    return kind != InvariantKind::total_roman && kind != InvariantKind::total_roman2;
}

VertexSet WeightFn::level(int i) const {
    VertexSet out;
    for (int v = 0; v < size(); ++v)
        if (values_[v] == i) out.insert(v);
    return out;
}

int WeightFn::weight() const {
    int total = 0;
    for (auto x : values_) total += x;
    return total;
}

std::string to_string(const WeightFn& f) {
    std::ostringstream os;
    os << '[';
    for (int v = 0; v < f.size(); ++v) os << (v ? "," : "") << f[v];
    os << ']';
    return os.str();
}

int witness_value(const Witness& w) {
    if (auto s = std::get_if<VertexSet>(&w)) return s->size();
    return std::get<WeightFn>(w).weight();
}

std::optional<std::string> infeasibility(const Graph& g, InvariantKind kind) {
    if (g.order() == 0) return "graph has no vertices";
    switch (kind) {
        case InvariantKind::domination:
        case InvariantKind::two_packing: return std::nullopt;
        case InvariantKind::double_total:
            if (min_degree(g) < 2) return "requires minimum degree >= 2";
            return std::nullopt;
        default:
            if (has_isolated_vertex(g)) return "requires a graph with no isolated vertex";
            return std::nullopt;
    }
}

bool validate(const Graph& g, InvariantKind kind, const VertexSet& s) {
    const int n = g.order();
    if (!is_set_valued(kind)) return false;
    if (s.bits() & ~g.vertex_mask()) return false;
    if (kind == InvariantKind::two_packing) {
        for (int u : s.members())
            for (int v : s.members())
                if (u < v && (g.closed_neighbors(u) & g.closed_neighbors(v))) return false;
        return true;
    }
    const auto shape = cover_shape(kind);
    for (int v = 0; v < n; ++v) {
        const Bits need = shape.closed ? g.closed_neighbors(v) : g.neighbors(v);
        if (std::popcount(need & s.bits()) < shape.demand) return false;
    }
    return true;
}

bool validate(const Graph& g, InvariantKind kind, const WeightFn& f) {
    if (is_set_valued(kind) || f.size() != g.order()) return false;
    const Bits positive = f.level(1).bits() | f.level(2).bits();
    const Bits two = f.level(2).bits();
    for (int v = 0; v < f.size(); ++v)
        if (f[v] > 2) return false;
    for (int v = 0; v < g.order(); ++v) {
        const Bits nb = g.neighbors(v);
        if ((nb & positive) == 0) return false;
        if (f[v] != 0) continue;
        if (kind == InvariantKind::total_roman) {
            if ((nb & two) == 0) return false;
        } else if (std::popcount(nb & positive) + std::popcount(nb & two) < 2) {
            return false;
        }
    }
    return true;
}

bool validate(const Graph& g, InvariantKind kind, const Witness& w) {
    return std::visit([&](const auto& x) { return validate(g, kind, x); }, w);
}

int exact_invariant(const Graph& g, InvariantKind kind) {
    require_feasible(g, kind);
    std::optional<int> value;
    if (kind == InvariantKind::two_packing) {
        value = CliqueSearch(detail::packing_compatibility(g)).maximum();
    } else if (is_set_valued(kind)) {
        const auto shape = cover_shape(kind);
        value = CoverSearch(g, shape.closed, shape.demand).minimum();
    } else {
        value = RomanSearch(g, roman_rule(kind)).minimum();
    }
    if (!value) throw InfeasibleError(std::string(kind_name(kind)) + " has no feasible witness");
    return *value;
}

Witness min_witness(const Graph& g, InvariantKind kind) {
    const int target = exact_invariant(g, kind);
    const int n = g.order();
    if (kind == InvariantKind::two_packing) {
        CliqueSearch search(detail::packing_compatibility(g));
        Bits in = 0, out = 0;
        for (int v = 0; v < n; ++v) {
            if (search.exists(target, in | bit(v), out)) in |= bit(v);
            else out |= bit(v);
        }
        return VertexSet(in);
    }
    if (is_set_valued(kind)) {
        const auto shape = cover_shape(kind);
        CoverSearch search(g, shape.closed, shape.demand);
        Bits in = 0, out = 0;
        for (int v = 0; v < n; ++v) {
            if (std::popcount(in) < target && search.exists(target, in | bit(v), out)) in |= bit(v);
            else out |= bit(v);
        }
        return VertexSet(in);
    }
    RomanSearch search(g, roman_rule(kind));
    RomanState fixed;
    for (int v = 0; v < n; ++v) {
        fixed.frozen |= bit(v);
        bool placed = false;
        for (int value = 0; value <= 2 && !placed; ++value) {
            RomanState trial = fixed;
            if (value >= 1) trial.positive |= bit(v);
            if (value == 2) trial.two |= bit(v);
            if (search.exists(target, trial)) {
                fixed = trial;
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("min_witness: lost feasibility while fixing values");
    }
    return to_weight_fn(fixed, n);
}

std::size_t for_each_optimal_witness(const Graph& g, InvariantKind kind,
                                     const std::function<bool(const Witness&)>& visit) {
    const int target = exact_invariant(g, kind);
    if (kind == InvariantKind::two_packing)
        return CliqueSearch(detail::packing_compatibility(g)).enumerate(target, [&](Bits c) {
            return visit(Witness(VertexSet(c)));
        });
    if (is_set_valued(kind)) {
        const auto shape = cover_shape(kind);
        return CoverSearch(g, shape.closed, shape.demand).enumerate(target, [&](Bits s) {
            return visit(Witness(VertexSet(s)));
        });
    }
    return RomanSearch(g, roman_rule(kind)).enumerate(target, [&](const RomanState& s) {
        return visit(Witness(to_weight_fn(s, g.order())));
    });
}

std::vector<Witness> enumerate_minimum_sets(const Graph& g, InvariantKind kind) {
    std::vector<Witness> out;
    for_each_optimal_witness(g, kind, [&](const Witness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace lexdom
