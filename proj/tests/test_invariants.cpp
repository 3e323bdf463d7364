#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lexdom/enumerate.hpp"
#include "lexdom/families.hpp"
#include "lexdom/invariants.hpp"
#include "naive_oracle.hpp"

using namespace lexdom;
using K = InvariantKind;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::optional<int> solver_value(const Graph& g, K kind) {
    try {
        return exact_invariant(g, kind);
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

WeightFn fn(std::initializer_list<int> values) {
    std::vector<std::uint8_t> v;
    for (int x : values) v.push_back(static_cast<std::uint8_t>(x));
    return WeightFn(v);
}

}  // namespace

TEST_CASE("kind names round trip") {
    for (auto kind : kAllKinds) CHECK(parse_kind(kind_name(kind)) == kind);
    CHECK_THROWS_AS(parse_kind("gamma"), std::invalid_argument);
    CHECK(is_set_valued(K::two_packing));
    CHECK_FALSE(is_set_valued(K::total_roman2));
}

TEST_CASE("validate") {
    CHECK(validate(path_graph(3), K::double_domination, VertexSet{0, 1, 2}));
    CHECK_FALSE(validate(path_graph(3), K::double_domination, VertexSet{0, 1}));

    auto k13 = star_graph(3);
    auto f = fn({2, 1, 0, 0});
    CHECK(validate(k13, K::total_roman2, f));
    CHECK(f.weight() == 3);
    CHECK(f.level(2) == VertexSet{0});
    CHECK(f.level(0) == VertexSet{2, 3});
    // Same function is not a TRDF witness? It is: every V0 leaf sees the centre in V2.
    CHECK(validate(k13, K::total_roman, f));
    CHECK_FALSE(validate(k13, K::total_roman2, fn({1, 1, 1, 0})));

    CHECK_FALSE(validate(cycle_graph(4), K::two_packing, VertexSet{0, 2}));
    CHECK(validate(path_graph(6), K::two_packing, VertexSet{0, 3}));
    CHECK(validate(cycle_graph(4), K::total_domination, VertexSet{0, 1}));
    CHECK_FALSE(validate(cycle_graph(4), K::total_domination, VertexSet{0, 2}));
    CHECK(validate(cycle_graph(4), K::double_total, VertexSet{0, 1, 2, 3}));

    // Wrong shapes are rejected, not errors.
    CHECK_FALSE(validate(k13, K::total_roman2, VertexSet{0, 1}));
    CHECK_FALSE(validate(k13, K::domination, f));
    CHECK_FALSE(validate(k13, K::total_roman2, fn({2, 1, 0})));
    CHECK_FALSE(validate(k13, K::domination, VertexSet{0, 7}));
}

TEST_CASE("exact values on named graphs") {
    CHECK(exact_invariant(path_graph(6), K::double_domination) == 5);
    CHECK(exact_invariant(cycle_graph(7), K::double_domination) == 5);
    CHECK(exact_invariant(star_graph(4), K::double_domination) == 5);
    CHECK(exact_invariant(star_graph(4), K::total_roman2) == 3);
    CHECK(exact_invariant(path_graph(4), K::total_domination) == 2);
    CHECK(exact_invariant(star_graph(3), K::two_packing) == 1);
    CHECK(exact_invariant(cycle_graph(4), K::total_roman2) == 3);
    CHECK(exact_invariant(cycle_graph(4), K::total_roman) == 4);
    CHECK(exact_invariant(cycle_graph(4), K::double_total) == 4);
    CHECK(exact_invariant(path_graph(7), K::two_packing) == 3);
}

TEST_CASE("degenerate and infeasible inputs") {
    auto k1 = Graph::from_edges(1, {});
    CHECK(exact_invariant(k1, K::domination) == 1);
    CHECK(exact_invariant(k1, K::two_packing) == 1);
    for (auto kind : {K::total_domination, K::double_domination, K::double_total, K::total_roman, K::total_roman2})
        CHECK_THROWS_AS(exact_invariant(k1, kind), InfeasibleError);

    CHECK_THROWS_AS(exact_invariant(path_graph(3), K::double_total), InfeasibleError);
    CHECK(infeasibility(path_graph(3), K::double_total).has_value());
    CHECK_FALSE(infeasibility(path_graph(3), K::double_domination).has_value());
    CHECK_THROWS_WITH_AS(exact_invariant(empty_graph(2), K::total_roman2),
                         doctest::Contains("isolated"), InfeasibleError);
    CHECK_THROWS_AS(min_witness(empty_graph(3), K::double_domination), InfeasibleError);
    CHECK_THROWS_AS(enumerate_minimum_sets(empty_graph(3), K::total_domination), InfeasibleError);
}

TEST_CASE("min_witness tie-break") {
    CHECK(std::get<VertexSet>(min_witness(path_graph(4), K::total_domination)) == VertexSet{1, 2});
    CHECK(std::get<VertexSet>(min_witness(complete_graph(3), K::domination)) == VertexSet{0});

    auto c6 = std::get<VertexSet>(min_witness(cycle_graph(6), K::double_domination));
    CHECK(c6.size() == 4);
    CHECK(validate(cycle_graph(6), K::double_domination, c6));

    // Lexicographically smallest value vector among weight-3 TR2DFs of K_{1,3}.
    CHECK(std::get<WeightFn>(min_witness(star_graph(3), K::total_roman2)) == fn({2, 0, 0, 1}));
}

TEST_CASE("min_witness is the lexicographic minimum of all optimal sets") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(rng, 3 + trial % 5, 0.45);
        for (auto kind : {K::domination, K::total_domination, K::double_domination, K::double_total, K::two_packing}) {
            auto all = naive::optimal_sets(g, kind);
            if (all.empty()) continue;
            std::vector<VertexSet> sets;
            for (auto s : all) sets.emplace_back(s);
            auto best = *std::min_element(sets.begin(), sets.end(), lex_less);
            CHECK(std::get<VertexSet>(min_witness(g, kind)) == best);
        }
    }
}

TEST_CASE("enumerate_minimum_sets") {
    auto c3 = enumerate_minimum_sets(cycle_graph(3), K::total_domination);
    std::set<Bits> got;
    for (auto& w : c3) got.insert(std::get<VertexSet>(w).bits());
    CHECK(got == std::set<Bits>{0b011, 0b101, 0b110});

    auto p2 = enumerate_minimum_sets(path_graph(2), K::double_domination);
    REQUIRE(p2.size() == 1);
    CHECK(std::get<VertexSet>(p2[0]) == VertexSet{0, 1});

    auto c6 = enumerate_minimum_sets(cycle_graph(6), K::double_domination);
    CHECK(c6.size() == naive::optimal_sets(cycle_graph(6), K::double_domination).size());

    // Early stop.
    std::size_t visited = for_each_optimal_witness(cycle_graph(6), K::double_domination,
                                                   [](const Witness&) { return false; });
    CHECK(visited == 1);
}

TEST_CASE("enumeration matches the brute-force optimum sets") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_graph(rng, 2 + trial % 6, 0.5);
        for (auto kind : {K::domination, K::total_domination, K::double_domination, K::double_total, K::two_packing}) {
            auto expected = naive::optimal_sets(g, kind);
            if (expected.empty()) continue;
            std::vector<Bits> got;
            for (auto& w : enumerate_minimum_sets(g, kind)) {
                CHECK(validate(g, kind, w));
                got.push_back(std::get<VertexSet>(w).bits());
            }
            std::sort(got.begin(), got.end());
            CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
            CHECK(got == expected);
        }
        if (!has_isolated_vertex(g) && g.order() <= 6) {
            for (auto kind : {K::total_roman, K::total_roman2}) {
                const int target = exact_invariant(g, kind);
                std::set<std::vector<std::uint8_t>> seen;
                for (auto& w : enumerate_minimum_sets(g, kind)) {
                    const auto& f = std::get<WeightFn>(w);
                    CHECK(f.weight() == target);
                    CHECK(validate(g, kind, f));
                    CHECK(seen.insert(f.values()).second);
                }
                // Count against the 3^n scan.
                std::size_t naive_count = 0;
                std::vector<int> f(g.order());
                long total = 1;
                for (int i = 0; i < g.order(); ++i) total *= 3;
                for (long code = 0; code < total; ++code) {
                    long c = code;
                    int w = 0;
                    for (int v = 0; v < g.order(); ++v, c /= 3) w += (f[v] = static_cast<int>(c % 3));
                    if (w == target && naive::function_ok(g, kind, f)) ++naive_count;
                }
                CHECK(seen.size() == naive_count);
            }
        }
    }
}

TEST_CASE("pruned search agrees with the brute-force scan on every labeled graph n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_labeled_graphs(n))
            for (auto kind : kAllKinds) {
                auto expected = naive::value(g, kind);
                auto got = solver_value(g, kind);
                CHECK(got == expected);
                if (got) CHECK(validate(g, kind, min_witness(g, kind)));
            }
}

TEST_CASE("pruned search agrees with the brute-force scan on random graphs n = 6..8") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 6 + trial % 3;
        auto g = random_graph(rng, n, 0.25 + 0.5 * ((trial / 3) % 3) / 2.0);
        for (auto kind : kAllKinds) CHECK(solver_value(g, kind) == naive::value(g, kind));
    }
}
