#include <doctest.h>

#include <random>

#include "lexdom/enumerate.hpp"
#include "lexdom/families.hpp"
#include "lexdom/formulas.hpp"
#include "lexdom/product.hpp"

using namespace lexdom;
using K = InvariantKind;

namespace {

int product_value(const Graph& g, const Graph& h, K kind = K::double_domination) {
    return default_oracle().require(lex_product(g, h).graph, kind);
}

Graph spec(const std::string& s) { return family(parse_family_spec(s)); }

}  // namespace

TEST_CASE("path and cycle closed forms") {
    CHECK(gamma_x2_path(9) == 7);
    CHECK(gamma_x2_cycle(8) == 6);
    CHECK(gamma_t_path_or_cycle(6) == 4);
    CHECK(gamma_x2_path(2) == 2);
    CHECK_THROWS_AS(gamma_x2_path(1), std::invalid_argument);
    CHECK_THROWS_AS(gamma_x2_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gamma_t_path_or_cycle(2), std::invalid_argument);

    for (int n = 3; n <= 16; ++n) {
        CHECK(gamma_x2_path(n) == exact_invariant(path_graph(n), K::double_domination));
        CHECK(gamma_x2_path(n) == exact_invariant(path_graph(n), K::total_roman2));
        CHECK(gamma_x2_cycle(n) == exact_invariant(cycle_graph(n), K::double_domination));
        CHECK(gamma_x2_cycle(n) == exact_invariant(cycle_graph(n), K::total_roman2));
        CHECK(gamma_t_path_or_cycle(n) == exact_invariant(path_graph(n), K::total_domination));
        CHECK(gamma_t_path_or_cycle(n) == exact_invariant(cycle_graph(n), K::total_domination));
    }
}

TEST_CASE("domination and total domination of products") {
    auto p4 = path_graph(4);
    CHECK(gamma_lex(p4, complete_graph(2)).value() == 2);
    CHECK(gamma_lex(p4, empty_graph(2)).value() == 2);
    CHECK(gamma_t_lex(cycle_graph(5), path_graph(3)).value() == 3);
    CHECK(gamma_lex(p4, complete_graph(2)).source == "domination-lex:gamma(G)");
    CHECK(gamma_lex(p4, empty_graph(2)).source == "domination-lex:gamma_t(G)");

    CHECK_THROWS_AS(gamma_lex(empty_graph(2), path_graph(2)), PremiseError);
    CHECK_THROWS_AS(gamma_t_lex(path_graph(3), Graph::from_edges(1, {})), PremiseError);

    for (const auto& g : {path_graph(5), cycle_graph(6), star_graph(3), spec("dstar:2,2")})
        for (const auto& h : {complete_graph(2), empty_graph(2), path_graph(4), empty_graph(3)}) {
            CHECK(gamma_lex(g, h).value() == product_value(g, h, K::domination));
            CHECK(gamma_t_lex(g, h).value() == product_value(g, h, K::total_domination));
        }
}

TEST_CASE("bounds interval") {
    auto b = gamma_x2_lex_bounds(cycle_graph(4), empty_graph(2));
    CHECK(b.lower == 3);
    CHECK(b.upper == 4);
    CHECK(b.contains(product_value(cycle_graph(4), empty_graph(2))));

    // P2 factor: always within [2,4].
    for (const auto& h : {complete_graph(2), empty_graph(2), path_graph(3), empty_graph(4)}) {
        auto r = gamma_x2_lex_bounds(path_graph(2), h);
        CHECK(r.lower >= 2);
        CHECK(r.upper <= 4);
    }

    // Trees against H with two universal vertices collapse to 2*gamma(T).
    for (const auto& t : {path_graph(4), path_graph(7), star_graph(4), spec("dstar:2,3")}) {
        auto r = gamma_x2_lex_bounds(t, complete_graph(3));
        CHECK(r.exact());
        CHECK(r.value() == 2 * exact_invariant(t, K::domination));
    }

    CHECK_THROWS_AS(gamma_x2_lex_bounds(empty_graph(3), path_graph(2)), PremiseError);
    CHECK_THROWS_AS(b.value(), std::logic_error);
}

TEST_CASE("bounds contain the oracle value on small factors") {
    std::vector<Graph> hs;
    for (int n = 2; n <= 3; ++n)
        for (const auto& h : enumerate_labeled_graphs(n)) hs.push_back(h);
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_labeled_graphs(n, predicates::no_isolated_vertex))
            for (const auto& h : hs) {
                auto r = gamma_x2_lex_bounds(g, h);
                CHECK(r.contains(product_value(g, h)));
            }
}

TEST_CASE("small value classification") {
    auto c = classify_small_value(path_graph(2), path_graph(4));
    CHECK(c.value == SmallValue::three);
    REQUIRE(c.matched);
    CHECK(*c.matched == SmallValueCase::i);

    CHECK(classify_small_value(complete_graph(3), complete_graph(2)).value == SmallValue::two);
    CHECK(classify_small_value(spec("dstar:2,3"), complete_graph(2)).value == SmallValue::four_or_more);
    CHECK(to_string(SmallValue::four_or_more) == ">=4");
    CHECK(to_string(SmallValueCase::iv) == "iv");

    // C4 with gamma(H)=1: only the last case applies.
    auto c4 = classify_small_value(cycle_graph(4), star_graph(2));
    CHECK(c4.value == SmallValue::three);
    CHECK(*c4.matched == SmallValueCase::vi);

    CHECK_THROWS_AS(classify_small_value(Graph::from_edges(1, {}), path_graph(2)), PremiseError);
}

TEST_CASE("classification agrees with the oracle on every labeled pair up to 4 x 3") {
    std::vector<Graph> hs;
    for (int n = 2; n <= 3; ++n)
        for (const auto& h : enumerate_labeled_graphs(n)) hs.push_back(h);
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_labeled_graphs(n))
            for (const auto& h : hs) {
                if (has_isolated_vertex(g) && has_isolated_vertex(h)) continue;
                const int v = product_value(g, h);
                const auto c = classify_small_value(g, h);
                CHECK((v == 2) == (c.value == SmallValue::two));
                CHECK((v == 3) == (c.value == SmallValue::three));
            }
}

TEST_CASE("family formulas") {
    CHECK(gamma_x2_lex_formula(parse_family_spec("path:7"), path_graph(4)).value() == 6);
    CHECK(gamma_x2_lex_formula(parse_family_spec("cycle:9"), empty_graph(3)).value() == 9);
    CHECK(gamma_x2_lex_formula(parse_family_spec("path:6"), empty_graph(3)).value() == 8);
    CHECK(gamma_x2_lex_formula(parse_family_spec("star:1,4"), path_graph(3)).value() == 3);
    CHECK(gamma_x2_lex_formula(parse_family_spec("cbip:2,3"), complete_graph(2)).value() == 3);
    CHECK(gamma_x2_lex_formula(parse_family_spec("cbip:3,2"), complete_graph(2)).value() == 3);
    CHECK(gamma_x2_lex_formula(parse_family_spec("cycle:5"), Graph::from_edges(1, {})).value() == 4);

    CHECK_THROWS_AS(gamma_x2_lex_formula(parse_family_spec("empty:3"), path_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(gamma_x2_lex_formula(parse_family_spec("dstar:2,2"), Graph::from_edges(1, {})), PremiseError);
    CHECK_THROWS_AS(gamma_x2_lex_formula(parse_family_spec("path:4"), Graph::from_edges(1, {})), PremiseError);
    CHECK_THROWS_AS(gamma_x2_lex_formula(parse_family_spec("path:2"), path_graph(3)), PremiseError);
    CHECK_THROWS_AS(gamma_x2_lex_formula(parse_family_spec("complete:2"), path_graph(3)), PremiseError);

    const std::vector<std::string> gs = {"path:3", "path:5", "path:7", "cycle:3", "cycle:4", "cycle:8",
                                         "complete:3", "complete:4", "star:1,3", "star:1,5",
                                         "dstar:2,2", "dstar:2,3", "cbip:2,2", "cbip:2,4", "cbip:3,3"};
    const std::vector<Graph> hs = {complete_graph(2), star_graph(3), path_graph(3), path_graph(4),
                                   empty_graph(2), empty_graph(3), cycle_graph(4)};
    for (const auto& s : gs)
        for (const auto& h : hs) {
            auto fs = parse_family_spec(s);
            if (fs.order() * h.order() > 40) continue;
            INFO(s << " with H of order " << h.order());
            CHECK(gamma_x2_lex_formula(fs, h).value() == product_value(family(fs), h));
        }
}

TEST_CASE("twice total domination equivalence") {
    auto p2 = check_2gamma_t_equivalence(path_graph(2), empty_graph(2));
    CHECK(p2.gamma_x2_product == 3);
    CHECK_FALSE(p2.lhs);
    CHECK_FALSE(p2.rhs);

    auto c4 = check_2gamma_t_equivalence(cycle_graph(4), empty_graph(2));
    CHECK(c4.lhs == c4.rhs);

    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_labeled_graphs(n, predicates::no_isolated_vertex))
            for (const auto& h : {complete_graph(2), empty_graph(2), path_graph(3), empty_graph(3)}) {
                auto r = check_2gamma_t_equivalence(g, h);
                CHECK(r.lhs == r.rhs);
            }
}
