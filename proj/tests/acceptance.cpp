// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lexdom/constructions.hpp"
#include "lexdom/enumerate.hpp"
#include "lexdom/families.hpp"
#include "lexdom/formulas.hpp"
#include "lexdom/graph6.hpp"
#include "lexdom/product.hpp"
#include "lexdom/verify.hpp"

using namespace lexdom;
using K = InvariantKind;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;  // keep the first failure
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s > limit_s) out.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
    if (!out.ok) ++failures;
    std::printf("%s %d %s (%.2f s%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), s,
                limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

Graph spec(const std::string& s) { return family(parse_family_spec(s)); }

int gx2_product(const Graph& g, const Graph& h) {
    return default_oracle().require(lex_product(g, h).graph, K::double_domination);
}

// Folds check reports into an outcome: every report passes and tests something.
void absorb(Outcome& out, const CheckReport& r, std::string& detail) {
    if (!r.passed()) {
        const auto& ce = r.counterexamples.front();
        out.fail(r.id + " counterexample g=" + ce.g + " h=" + ce.h + ": " + ce.observed);
    }
    if (r.tested == 0) out.fail(r.id + " tested nothing");
    if (r.tested + r.skipped_total() != r.generated) out.fail(r.id + " skip accounting is off");
    if (!detail.empty()) detail += ", ";
    detail += r.id + " " + std::to_string(r.tested) + "/" + std::to_string(r.generated) + " tested";
}

}  // namespace

int main() {
    const CorpusSpec corpus = build_corpus(CorpusConfig{});

    criterion(1, "gx2 of paths and cycles, n=3..12", 1.0, [] {
        Outcome out;
        for (int n = 3; n <= 12; ++n) {
            int p = exact_invariant(path_graph(n), K::double_domination);
            int c = exact_invariant(cycle_graph(n), K::double_domination);
            if (p != gamma_x2_path(n)) out.fail("P_" + std::to_string(n) + " = " + std::to_string(p));
            if (c != gamma_x2_cycle(n)) out.fail("C_" + std::to_string(n) + " = " + std::to_string(c));
        }
        if (exact_invariant(path_graph(6), K::double_domination) != 5) out.fail("gx2(P_6) != 5");
        if (exact_invariant(cycle_graph(7), K::double_domination) != 5) out.fail("gx2(C_7) != 5");
        out.detail = out.ok ? "20 values" : out.detail;
        return out;
    });

    criterion(2, "stars K_1,r: gx2 = r+1, gtr2 = 3, r=3..6", 1.0, [] {
        Outcome out;
        for (int r = 3; r <= 6; ++r) {
            auto s = star_graph(r);
            if (exact_invariant(s, K::double_domination) != r + 1) out.fail("gx2(K_1," + std::to_string(r) + ")");
            if (exact_invariant(s, K::total_roman2) != 3) out.fail("gtr2(K_1," + std::to_string(r) + ")");
        }
        return out;
    });

    criterion(3, "gx2(GoH) = gtr2(GoH), isolated-free G n<=4 x nontrivial H n<=3", 300.0, [] {
        CorpusConfig cfg;
        cfg.single_max = 2;
        cfg.g_max = 4;
        cfg.h_max = 3;
        cfg.grid = false;
        cfg.product_cap = 12;
        auto pairs = build_corpus(cfg);
        Outcome out;
        if (pairs.pairs.size() != 46 * 10) out.fail("expected 460 pairs, got " + std::to_string(pairs.pairs.size()));
        auto r = run_check("V6", pairs);
        if (r.tested != pairs.pairs.size()) out.fail("only " + std::to_string(r.tested) + " pairs tested");
        std::string detail;
        absorb(out, r, detail);
        if (out.ok) out.detail = detail;
        return out;
    });

    criterion(4, "formula grid P_n, C_n o {K2, P3, P4, N3}, n=3..10, cap 40", 600.0, [] {
        Outcome out;
        auto grid = formula_grid(3, 10, {"complete:2", "path:3", "path:4", "empty:3"}, 40);
        if (grid.size() != 2 * 8 * 4) out.fail("grid has " + std::to_string(grid.size()) + " cells, expected 64");
        for (const auto& c : grid)
            if (c.oracle != c.formula)
                out.fail(c.g + " o " + c.h + ": oracle " + std::to_string(c.oracle) + ", formula " + std::to_string(c.formula));
        struct Pin {
            std::string g, h;
            int value;
        };
        for (const Pin& p : {Pin{"path:7", "path:4", 6}, Pin{"cycle:7", "path:4", 6}, Pin{"cycle:9", "empty:3", 9},
                             Pin{"path:6", "empty:3", 8}}) {
            int got = gx2_product(spec(p.g), spec(p.h));
            int formula = gamma_x2_lex_formula(parse_family_spec(p.g), spec(p.h)).value();
            if (got != p.value || formula != p.value)
                out.fail("pinned " + p.g + " o " + p.h + ": oracle " + std::to_string(got) + ", formula " +
                         std::to_string(formula) + ", want " + std::to_string(p.value));
        }
        if (out.ok) out.detail = std::to_string(grid.size()) + " cells, 4 pinned";
        return out;
    });

    criterion(5, "small-value classification over the default corpus", 0, [&] {
        Outcome out;
        std::string detail;
        absorb(out, run_check("V15", corpus), detail);
        if (out.ok) out.detail = detail;
        return out;
    });

    criterion(6, "bounds over the default corpus", 0, [&] {
        Outcome out;
        std::string detail;
        absorb(out, run_check("V7", corpus), detail);
        absorb(out, run_check("V13", corpus), detail);
        if (out.ok) out.detail = detail;
        return out;
    });

    criterion(7, "constructions validate with their claimed size", 0, [] {
        Outcome out;
        int built = 0;
        auto expect = [&](const std::string& what, const Graph& product, K kind, const Witness& w, int size) {
            ++built;
            if (!validate(product, kind, w)) out.fail(what + " does not validate");
            if (witness_value(w) != size)
                out.fail(what + " has size " + std::to_string(witness_value(w)) + ", claimed " + std::to_string(size));
        };

        for (const auto& hs : {"empty:2", "path:4", "cycle:4", "cbip:2,2", "path:3", "empty:3"}) {
            Graph h = spec(hs);
            bool applies = smallest_dominating_pair(h).has_value();
            for (int n = 2; n <= 20 && n * h.order() <= 64; ++n) {
                if (!applies) {
                    try {
                        path_scheme_gamma2(n, h);
                        out.fail(std::string("path scheme accepted ") + hs);
                    } catch (const std::invalid_argument&) {
                    }
                    continue;
                }
                expect("path scheme P_" + std::to_string(n) + " o " + hs, lex_product(path_graph(n), h).graph,
                       K::double_domination, path_scheme_gamma2(n, h), path_scheme_size(n));
            }
        }

        struct Case {
            Graph g, h;
            SmallValueCase c;
        };
        const std::vector<Case> cases = {
            {path_graph(2), path_graph(4), SmallValueCase::i},
            {complete_graph(3), empty_graph(3), SmallValueCase::ii},
            {star_graph(3), empty_graph(2), SmallValueCase::iii},
            {Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 4}}), empty_graph(3),
             SmallValueCase::iv},
            {Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}}),
             empty_graph(2), SmallValueCase::v},
            {cycle_graph(4), star_graph(2), SmallValueCase::vi},
        };
        for (const auto& c : cases) {
            std::string what = "small value case " + to_string(c.c);
            if (!small_value_case_holds(c.g, c.h, c.c)) {
                out.fail(what + " instance does not meet its premise");
                continue;
            }
            expect(what, lex_product(c.g, c.h).graph, K::double_domination, small_value_witness(c.g, c.h, c.c), 3);
        }

        std::vector<Graph> gs;
        for (int n = 2; n <= 4; ++n)
            for (auto& g : enumerate_labeled_graphs(n, predicates::no_isolated_vertex)) gs.push_back(g);
        for (int n = 3; n <= 10; ++n) gs.push_back(path_graph(n)), gs.push_back(cycle_graph(n));
        for (const auto& hs : {"complete:2", "complete:3", "complete:4"}) {
            Graph h = spec(hs);
            for (const auto& g : gs) {
                if (g.order() * h.order() > 64) continue;
                auto p = lex_product(g, h).graph;
                expect("two-universal " + write_graph6(g) + " o " + hs, p, K::double_domination,
                       two_universal_witness(g, h), 2 * exact_invariant(g, K::domination));
                expect("universal lift " + write_graph6(g) + " o " + hs, p, K::total_roman2,
                       universal_lift_witness(g, h), exact_invariant(g, K::total_roman2));
            }
        }

        const std::vector<std::vector<int>> hk_sizes = {{1, 1, 1}, {2, 1, 3}, {3, 2, 3, 2}, {1, 1, 1, 1, 1},
                                                        {2, 2, 2, 2, 2, 2}, {1, 4, 1, 4, 1, 4, 1}, {2, 1, 2, 1, 2, 1, 2, 1}};
        for (const auto& sizes : hk_sizes) {
            int k = static_cast<int>(sizes.size());
            FamilySpec fs{FamilyKind::family_hk, {k}};
            fs.params.insert(fs.params.end(), sizes.begin(), sizes.end());
            expect("H_k " + fs.to_string(), family(fs), K::double_total, hk_witness(k, sizes), k);
        }
        if (out.ok) out.detail = std::to_string(built) + " witnesses";
        return out;
    });

    criterion(8, "per-copy and projection structure of minimum sets", 0, [&] {
        Outcome out;
        std::string detail;
        absorb(out, run_check("V10", corpus), detail);
        absorb(out, run_check("V16", corpus), detail);
        // The end pattern needs the canonical path instances with N3 in the corpus.
        for (int n : {6, 7}) {
            auto replay = replay_corpus(path_graph(n), empty_graph(3), CorpusConfig{});
            if (!replay.pairs.front().g_spec) out.fail("P_" + std::to_string(n) + " not recognized as a path");
            auto r = run_check("V16", replay);
            if (r.tested != 1) out.fail("P_" + std::to_string(n) + " o N3 was not tested by V16");
            if (!r.passed()) out.fail("P_" + std::to_string(n) + " o N3: " + r.counterexamples.front().observed);
        }
        if (out.ok) out.detail = detail + ", P6 o N3 and P7 o N3 end pattern";
        return out;
    });

    criterion(9, "inequality chain and value characterizations, isolated-free n<=6", 600.0, [&] {
        Outcome out;
        std::string detail;
        for (const auto* id : {"V1", "V2", "V3", "V4"}) {
            auto r = run_check(id, corpus);
            absorb(out, r, detail);
        }
        if (corpus.singles.size() != 1 + 4 + 41 + 768 + 27449)
            out.fail("expected 28263 single graphs, got " + std::to_string(corpus.singles.size()));
        if (out.ok) out.detail = detail;
        return out;
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
