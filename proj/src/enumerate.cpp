#include "lexdom/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace lexdom {

LabeledGraphStream::LabeledGraphStream(int n, GraphPredicate predicate, int cap)
    : n_(n), predicate_(std::move(predicate)) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > cap)
        throw std::invalid_argument("enumeration order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n > 11) throw std::invalid_argument("labeled enumeration is limited to n <= 11");
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    total_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> LabeledGraphStream::next() {
    while (code_ < total_) {
        std::vector<Bits> rows(n_, 0);
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if ((code_ >> k) & 1U) {
                auto [i, j] = pairs_[k];
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        ++code_;
        auto g = Graph::from_adjacency(std::move(rows));
        if (!predicate_ || predicate_(g)) return g;
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_labeled_graphs(int n, const GraphPredicate& predicate, int cap) {
    LabeledGraphStream stream(n, predicate, cap);
    std::vector<Graph> out;
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
}

namespace predicates {
bool no_isolated_vertex(const Graph& g) { return !has_isolated_vertex(g); }
bool connected(const Graph& g) { return is_connected(g); }
}  // namespace predicates

}  // namespace lexdom
