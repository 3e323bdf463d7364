#include "lexdom/oracle.hpp"

#include <stdexcept>

#include "lexdom/graph6.hpp"

namespace lexdom {

int InvariantOracle::require(const Graph& g, InvariantKind kind) const {
    auto v = value(g, kind);
    if (!v) {
        auto why = infeasibility(g, kind);
        throw InfeasibleError(std::string(kind_name(kind)) + " is undefined for " + write_graph6(g) +
                              (why ? ": " + *why : std::string()));
    }
    return *v;
}

std::optional<int> ExactOracle::value(const Graph& g, InvariantKind kind) const {
    std::string key = write_graph6(g);
    key += '#';
    key += kind_name(kind);
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    std::optional<int> result;
    if (!infeasibility(g, kind)) {
        try {
            result = exact_invariant(g, kind);
        } catch (const InfeasibleError&) {
            result.reset();
        }
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), result);
    return result;
}

std::size_t ExactOracle::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

std::optional<int> PerturbedOracle::value(const Graph& g, InvariantKind kind) const {
    auto v = inner_.value(g, kind);
    if (v && kind == kind_ && g.order() >= min_order_) return *v + delta_;
    return v;
}

PerturbedOracle parse_perturbation(const std::string& text, const InvariantOracle& inner) {
    auto a = text.find(':');
    auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("perturbation must be KIND:DELTA:MIN_ORDER, got '" + text + "'");
    try {
        std::size_t used = 0;
        std::string d = text.substr(a + 1, b - a - 1), m = text.substr(b + 1);
        int delta = std::stoi(d, &used);
        if (used != d.size()) throw std::invalid_argument(d);
        int min_order = std::stoi(m, &used);
        if (used != m.size()) throw std::invalid_argument(m);
        return PerturbedOracle(inner, parse_kind(text.substr(0, a)), delta, min_order);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("perturbation must be KIND:DELTA:MIN_ORDER, got '" + text + "'");
    }
}

const InvariantOracle& default_oracle() {
    static const ExactOracle oracle;
    return oracle;
}

FactorRegime factor_regime(const Graph& h, const InvariantOracle& oracle) {
    FactorRegime r;
    r.order = h.order();
    r.gamma = oracle.require(h, InvariantKind::domination);
    r.universal_count = universal_vertices(h).size();
    return r;
}

}  // namespace lexdom
