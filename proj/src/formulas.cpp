#include "lexdom/formulas.hpp"

#include "lexdom/product.hpp"

#include <algorithm>
#include <climits>

namespace lexdom {

namespace {

using K = InvariantKind;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_isolated_free(const Graph& g, std::vector<std::string>& assumptions) {
    if (g.order() == 0 || has_isolated_vertex(g)) throw PremiseError("G must have no isolated vertex");
    assumptions.emplace_back("G has no isolated vertex");
}

void require_nontrivial(const Graph& h, const char* name, std::vector<std::string>& assumptions) {
    if (h.order() < 2) throw PremiseError(std::string(name) + " must be nontrivial");
    assumptions.push_back(std::string(name) + " is nontrivial");
}

// Oracle value that treats "undefined" as a failed condition.
bool equals(const InvariantOracle& oracle, const Graph& g, K kind, int x) {
    auto v = oracle.value(g, kind);
    return v && *v == x;
}

FormulaResult exact_result(int value, std::string source, std::vector<std::string> assumptions) {
    FormulaResult r;
    r.lower = r.upper = value;
    r.source = std::move(source);
    r.assumptions = std::move(assumptions);
    return r;
}

}  // namespace

int FormulaResult::value() const {
    if (lower != upper)
        throw std::logic_error("interval [" + std::to_string(lower) + "," + std::to_string(upper) + "] is not exact");
    return lower;
}

int gamma_x2_path(int n) {
    if (n < 2) throw std::invalid_argument("gamma_x2_path needs n >= 2");
    return 2 * ceil_div(n, 3) + (n % 3 == 0 ? 1 : 0);
}

int gamma_x2_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gamma_x2_cycle needs n >= 3");
    return ceil_div(2 * n, 3);
}

int gamma_t_path_or_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gamma_t_path_or_cycle needs n >= 3");
    switch (n % 4) {
        case 0: return n / 2;
        case 2: return n / 2 + 1;
        default: return (n + 1) / 2;
    }
}

FormulaResult gamma_lex(const Graph& g, const Graph& h, const InvariantOracle& oracle) {
    std::vector<std::string> assumptions;
    require_isolated_free(g, assumptions);
    require_nontrivial(h, "H", assumptions);
    const int gh = oracle.require(h, K::domination);
    if (gh == 1) {
        assumptions.emplace_back("gamma(H) = 1");
        return exact_result(oracle.require(g, K::domination), "domination-lex:gamma(G)", std::move(assumptions));
    }
    assumptions.emplace_back("gamma(H) >= 2");
    return exact_result(oracle.require(g, K::total_domination), "domination-lex:gamma_t(G)", std::move(assumptions));
}

FormulaResult gamma_t_lex(const Graph& g, const Graph& h, const InvariantOracle& oracle) {
    std::vector<std::string> assumptions;
    require_isolated_free(g, assumptions);
    require_nontrivial(h, "H", assumptions);
    return exact_result(oracle.require(g, K::total_domination), "total-domination-lex:gamma_t(G)", std::move(assumptions));
}

FormulaResult gamma_x2_lex_bounds(const Graph& g, const Graph& h, const InvariantOracle& oracle) {
    FormulaResult r;
    require_isolated_free(g, r.assumptions);
    require_nontrivial(h, "H", r.assumptions);
    r.source = "double-domination-lex-bounds";

    const int n = g.order();
    const int gt = oracle.require(g, K::total_domination);
    const int gg = oracle.require(g, K::domination);
    const int rho = oracle.require(g, K::two_packing);
    const int tr2 = oracle.require(g, K::total_roman2);
    const auto reg = factor_regime(h, oracle);

    auto lower = [&](std::string source, std::string premise, int value) {
        r.lower_terms.push_back({std::move(source), std::move(premise), value});
    };
    auto upper = [&](std::string source, std::string premise, int value) {
        r.upper_terms.push_back({std::move(source), std::move(premise), value});
    };

    lower("gamma_t(G)", "always", gt);
    lower("2*rho(G)", "always", 2 * rho);
    upper("2*gamma_t(G)", "always", 2 * gt);

    if (reg.gamma >= 2) lower("gamma_t{R2}(G)", "gamma(H) >= 2", tr2);
    if (reg.universal_count == 1) {
        lower("gamma_t{R2}(G)", "H has exactly one universal vertex", tr2);
        upper("gamma_t{R2}(G)", "H has exactly one universal vertex", tr2);
    }
    if (reg.gamma == 1) upper("gamma_t{R2}(G)", "gamma(H) = 1", tr2);
    if (reg.two_universal()) upper("2*gamma(G)", "H has at least two universal vertices", 2 * gg);
    if (n >= 3 && is_connected(g)) upper("2*floor(2n/3)", "G connected of order >= 3", 2 * (2 * n / 3));
    if (min_degree(g) >= 2) {
        upper("gamma_2t(G)", "min degree of G >= 2", oracle.require(g, K::double_total));
        upper("n", "min degree of G >= 2", n);
    }
    if (!has_isolated_vertex(h))
        upper("gamma(G)*gamma_x2(H)", "H has no isolated vertex", gg * oracle.require(h, K::double_domination));

    r.lower = 0;
    for (const auto& t : r.lower_terms) r.lower = std::max(r.lower, t.value);
    r.upper = INT_MAX;
    for (const auto& t : r.upper_terms) r.upper = std::min(r.upper, t.value);
    if (r.lower > r.upper)
        throw std::logic_error("inconsistent bounds [" + std::to_string(r.lower) + "," + std::to_string(r.upper) +
                               "]: the oracle contradicts a bound");
    return r;
}

std::string to_string(SmallValue v) {
    switch (v) {
        case SmallValue::two: return "2";
        case SmallValue::three: return "3";
        case SmallValue::four_or_more: return ">=4";
    }
    return "?";
}

std::string to_string(SmallValueCase c) {
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
    return names[static_cast<int>(c) - 1];
}

bool small_value_case_holds(const Graph& g, const Graph& h, SmallValueCase c, const InvariantOracle& oracle) {
    if (g.order() < 2 || h.order() < 2) throw PremiseError("G and H must be nontrivial");
    const int gh = oracle.require(h, K::domination);
    const int ug = universal_vertices(g).size();
    const int uh = universal_vertices(h).size();
    switch (c) {
        case SmallValueCase::i:
            return is_p2(g) && gh == 2;
        case SmallValueCase::ii:
            return !is_p2(g) && ug >= 2 && gh >= 2;
        case SmallValueCase::iii:
            return ug == 1 && (gh == 2 || uh == 1);
        case SmallValueCase::iv:
            return ug == 1 && gh >= 3 && equals(oracle, g, K::double_total, 3);
        case SmallValueCase::v:
            return oracle.require(g, K::domination) == 2 && equals(oracle, g, K::double_total, 3);
        case SmallValueCase::vi: {
            if (gh != 1 || oracle.require(g, K::domination) != 2) return false;
            if (!equals(oracle, g, K::double_domination, 3)) return false;
            auto g2t = oracle.value(g, K::double_total);
            return g2t && *g2t > 3;
        }
    }
    return false;
}

SmallValueClass classify_small_value(const Graph& g, const Graph& h, const InvariantOracle& oracle) {
    if (g.order() < 2 || h.order() < 2) throw PremiseError("G and H must be nontrivial");
    SmallValueClass out;
    const bool gamma_one = oracle.require(g, K::domination) == 1 && oracle.require(h, K::domination) == 1;
    if (gamma_one && (equals(oracle, g, K::double_domination, 2) || equals(oracle, h, K::double_domination, 2))) {
        out.value = SmallValue::two;
        return out;
    }
    for (auto c : {SmallValueCase::i, SmallValueCase::ii, SmallValueCase::iii, SmallValueCase::iv, SmallValueCase::v,
                   SmallValueCase::vi})
        if (small_value_case_holds(g, h, c, oracle)) out.all_matches.push_back(c);
    if (!out.all_matches.empty()) {
        out.value = SmallValue::three;
        out.matched = out.all_matches.front();
    }
    return out;
}

FormulaResult gamma_x2_lex_formula(const FamilySpec& spec, const Graph& h, const InvariantOracle& oracle) {
    spec.validate();
    std::vector<std::string> assumptions;
    const auto& p = spec.params;
    const bool trivial_h = h.order() < 2;
    auto nontrivial = [&] { require_nontrivial(h, "H", assumptions); };
    const int gh = oracle.require(h, K::domination);
    auto note_regime = [&] {
        assumptions.push_back(gh == 1 ? "gamma(H) = 1" : gh == 2 ? "gamma(H) = 2" : "gamma(H) >= 3");
    };

    switch (spec.kind) {
        case FamilyKind::path: {
            const int n = p[0];
            if (n < 3) throw PremiseError("path formula needs n >= 3");
            note_regime();
            if (gh == 1) {
                nontrivial();
                const bool x2_two = equals(oracle, h, K::double_domination, 2);
                assumptions.push_back(x2_two ? "gamma_x2(H) = 2" : "gamma_x2(H) >= 3");
                const int v = 2 * ceil_div(n, 3) + (!x2_two && n % 3 == 0 ? 1 : 0);
                return exact_result(v, "path-lex:gamma(H)=1", std::move(assumptions));
            }
            if (gh == 2) {
                const int r = n % 7;
                return exact_result(n - n / 7 + (r == 1 || r == 2 ? 1 : 0), "path-lex:gamma(H)=2", std::move(assumptions));
            }
            return exact_result(2 * gamma_t_path_or_cycle(n), "path-lex:gamma(H)>=3", std::move(assumptions));
        }
        case FamilyKind::cycle: {
            const int n = p[0];
            note_regime();
            if (gh == 1) {
                // Trivial H is allowed here: the product is C_n itself.
                if (trivial_h) assumptions.emplace_back("H is trivial");
                return exact_result(gamma_x2_cycle(n), "cycle-lex:gamma(H)=1", std::move(assumptions));
            }
            if (gh == 2) {
                const int r = n % 7;
                return exact_result(n - n / 7 + (r == 1 || r == 2 ? 1 : 0), "cycle-lex:gamma(H)=2", std::move(assumptions));
            }
            return exact_result(n, "cycle-lex:gamma(H)>=3", std::move(assumptions));
        }
        case FamilyKind::complete: {
            if (p[0] < 3) throw PremiseError("complete-graph formula needs n >= 3");
            nontrivial();
            note_regime();
            return exact_result(gh == 1 ? 2 : 3, "complete-lex", std::move(assumptions));
        }
        case FamilyKind::star: {
            if (spec.order() < 3) throw PremiseError("star formula needs order >= 3");
            nontrivial();
            if (equals(oracle, h, K::double_domination, 2)) {
                assumptions.emplace_back("gamma_x2(H) = 2");
                return exact_result(2, "star-lex", std::move(assumptions));
            }
            assumptions.emplace_back("gamma_x2(H) >= 3");
            if (gh <= 2) {
                assumptions.emplace_back("gamma(H) <= 2");
                return exact_result(3, "star-lex", std::move(assumptions));
            }
            assumptions.emplace_back("gamma(H) >= 3");
            return exact_result(4, "star-lex", std::move(assumptions));
        }
        case FamilyKind::double_star: {
            if (std::min(p[0], p[1]) < 2) throw PremiseError("double-star formula needs both sides >= 2");
            // With trivial H the product is the double star itself, whose value exceeds 4.
            nontrivial();
            return exact_result(4, "double-star-lex", std::move(assumptions));
        }
        case FamilyKind::complete_bipartite: {
            const int n1 = std::min(p[0], p[1]);
            if (n1 < 2) throw PremiseError("complete-bipartite formula needs both sides >= 2");
            note_regime();
            if (n1 == 2 && gh == 1) {
                assumptions.emplace_back("smaller side has 2 vertices");
                return exact_result(3, "complete-bipartite-lex", std::move(assumptions));
            }
            return exact_result(4, "complete-bipartite-lex", std::move(assumptions));
        }
        default:
            throw std::invalid_argument("no closed formula for family " + spec.to_string());
    }
}

TwiceTotalEquivalence check_2gamma_t_equivalence(const Graph& g, const Graph& h, const InvariantOracle& oracle) {
    std::vector<std::string> unused;
    require_isolated_free(g, unused);
    require_nontrivial(h, "H", unused);
    auto product = lex_product(g, h);
    TwiceTotalEquivalence out;
    out.gamma_x2_product = oracle.require(product.graph, K::double_domination);
    out.gamma_tr_product = oracle.require(product.graph, K::total_roman);
    out.gamma_t_g = oracle.require(g, K::total_domination);
    out.gamma_g = oracle.require(g, K::domination);
    out.gamma_h = oracle.require(h, K::domination);
    out.lhs = out.gamma_x2_product == 2 * out.gamma_t_g;
    out.rhs = out.gamma_x2_product == out.gamma_tr_product && (out.gamma_t_g == out.gamma_g || out.gamma_h >= 2);
    return out;
}

}  // namespace lexdom
