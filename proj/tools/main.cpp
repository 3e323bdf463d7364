#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexdom/constructions.hpp"
#include "lexdom/enumerate.hpp"
#include "lexdom/families.hpp"
#include "lexdom/formulas.hpp"
#include "lexdom/graph6.hpp"
#include "lexdom/invariants.hpp"
#include "lexdom/oracle.hpp"
#include "lexdom/product.hpp"
#include "lexdom/verify.hpp"

using namespace lexdom;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

json witness_json(const Witness& w) {
    if (const auto* s = std::get_if<VertexSet>(&w)) return s->members();
    const auto& f = std::get<WeightFn>(w);
    return std::vector<int>(f.values().begin(), f.values().end());
}

json terms_json(const std::vector<BoundTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) out.push_back({{"value", t.value}, {"source", t.source}, {"premise", t.premise}});
    return out;
}

json formula_json(const FormulaResult& r) {
    json out = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}};
    if (r.exact()) out["value"] = r.lower;
    out["source"] = r.source;
    out["assumptions"] = r.assumptions;
    if (!r.lower_terms.empty()) out["lower_terms"] = terms_json(r.lower_terms);
    if (!r.upper_terms.empty()) out["upper_terms"] = terms_json(r.upper_terms);
    return out;
}

std::optional<VertexSet> optional_set(const std::vector<int>& members) {
    if (members.empty()) return std::nullopt;
    return VertexSet::from_members(members);
}

SmallValueCase parse_case(const std::string& name) {
    static const std::vector<std::string> names = {"i", "ii", "iii", "iv", "v", "vi"};
    for (std::size_t k = 0; k < names.size(); ++k)
        if (name == names[k] || name == std::to_string(k + 1)) return static_cast<SmallValueCase>(k + 1);
    throw std::invalid_argument("unknown case '" + name + "' (i..vi)");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct InvariantArgs {
    std::string graph;
    std::string kind;
    bool witness = false;
    bool all_min = false;
    int limit = 50;
};

int run_invariant(const InvariantArgs& a) {
    Graph g = graph_from_argument(a.graph);
    InvariantKind kind = parse_kind(a.kind);
    json out = {{"graph", write_graph6(g)}, {"order", g.order()}, {"kind", std::string(kind_name(kind))}};
    if (auto why = infeasibility(g, kind)) {
        out["value"] = nullptr;
        out["infeasible"] = *why;
        print(out);
        return kPass;
    }
    if (a.witness) {
        Witness w = min_witness(g, kind);
        out["value"] = witness_value(w);
        out["witness"] = witness_json(w);
    } else {
        out["value"] = exact_invariant(g, kind);
    }
    if (a.all_min) {
        json listed = json::array();
        std::size_t count = for_each_optimal_witness(g, kind, [&](const Witness& w) {
            if (static_cast<int>(listed.size()) < a.limit) listed.push_back(witness_json(w));
            return true;
        });
        out["count"] = count;
        out["witnesses"] = listed;
        out["truncated"] = count > listed.size();
    }
    print(out);
    return kPass;
}

int run_product(const std::string& gs, const std::string& hs, const std::string& emit) {
    auto p = lex_product(graph_from_argument(gs), graph_from_argument(hs));
    json sidecar = {{"ng", p.index.ng}, {"nh", p.index.nh}, {"order", p.graph.order()},
                    {"edges", p.graph.edge_count()}, {"encoding", "u*nh+v"}};
    if (emit == "graph6") {
        std::cout << write_graph6(p.graph) << '\n' << sidecar.dump() << '\n';
    } else {
        json out = {{"graph6", write_graph6(p.graph)}, {"index", sidecar}};
        print(out);
    }
    return kPass;
}

int run_formula(const std::string& gs, const std::string& hs, const std::string& kind) {
    Graph h = graph_from_argument(hs);
    json out = {{"g", gs}, {"h", write_graph6(h)}, {"kind", kind}};
    if (kind == "gx2") {
        out["result"] = formula_json(gamma_x2_lex_formula(parse_family_spec(gs), h));
    } else if (kind == "g") {
        out["result"] = formula_json(gamma_lex(graph_from_argument(gs), h));
    } else if (kind == "gt") {
        out["result"] = formula_json(gamma_t_lex(graph_from_argument(gs), h));
    } else {
        throw std::invalid_argument("formula kind must be gx2, g or gt");
    }
    print(out);
    return kPass;
}

int run_bounds(const std::string& gs, const std::string& hs, bool with_oracle) {
    Graph g = graph_from_argument(gs), h = graph_from_argument(hs);
    auto r = gamma_x2_lex_bounds(g, h);
    json out = {{"g", write_graph6(g)}, {"h", write_graph6(h)}, {"kind", "gx2"}, {"bounds", formula_json(r)}};
    if (g.order() >= 2 && h.order() >= 2) {
        auto c = classify_small_value(g, h);
        json cls = {{"value", to_string(c.value)}};
        if (c.matched) cls["case"] = to_string(*c.matched);
        json all = json::array();
        for (auto m : c.all_matches) all.push_back(to_string(m));
        cls["all_cases"] = all;
        out["small_value"] = cls;
    }
    if (!with_oracle) {
        print(out);
        return kPass;
    }
    auto p = lex_product(g, h);
    auto v = default_oracle().value(p.graph, InvariantKind::double_domination);
    out["oracle"] = v ? json(*v) : json(nullptr);
    bool ok = !v || r.contains(*v);
    out["contained"] = ok;
    print(out);
    return ok ? kPass : kCounterexample;
}

struct ConstructArgs {
    std::string scheme;
    int n = 0;
    std::string g;
    std::string h;
    std::string c;
    std::vector<int> pair;
    std::vector<int> g_set;
    int single = -1;
    int k = 0;
    std::vector<int> sizes;
    bool optimal = false;
};

int run_construct(const ConstructArgs& a) {
    json out = {{"scheme", a.scheme}};
    Graph product;
    Witness w;
    InvariantKind kind = InvariantKind::double_domination;
    std::optional<int> expected;

    if (a.scheme == "hk") {
        FamilySpec spec{FamilyKind::family_hk, {a.k}};
        spec.params.insert(spec.params.end(), a.sizes.begin(), a.sizes.end());
        product = family(spec);
        kind = InvariantKind::double_total;
        w = hk_witness(a.k, a.sizes);
        expected = a.k;
        out["graph"] = spec.to_string();
    } else {
        if (a.h.empty()) throw std::invalid_argument("--h is required for scheme " + a.scheme);
        Graph h = graph_from_argument(a.h);
        Graph g;
        if (a.scheme == "path-g2") {
            if (a.n < 2) throw std::invalid_argument("--n >= 2 is required for path-g2");
            g = path_graph(a.n);
            std::optional<int> single;
            if (a.single >= 0) single = a.single;
            w = path_scheme_gamma2(a.n, h, optional_set(a.pair), single);
            expected = path_scheme_size(a.n);
            out["row"] = path_scheme_row(a.n);
        } else {
            if (a.g.empty()) throw std::invalid_argument("--g is required for scheme " + a.scheme);
            g = graph_from_argument(a.g);
            if (a.scheme == "small") {
                if (a.c.empty()) throw std::invalid_argument("--case is required for scheme small");
                w = small_value_witness(g, h, parse_case(a.c), optional_set(a.pair));
                expected = 3;
            } else if (a.scheme == "two-universal") {
                w = two_universal_witness(g, h, optional_set(a.g_set));
                expected = 2 * exact_invariant(g, InvariantKind::domination);
            } else if (a.scheme == "lift") {
                w = universal_lift_witness(g, h);
                kind = InvariantKind::total_roman2;
                expected = exact_invariant(g, InvariantKind::total_roman2);
            } else {
                throw std::invalid_argument("unknown scheme '" + a.scheme + "'");
            }
        }
        auto p = lex_product(g, h);
        product = p.graph;
        out["g"] = write_graph6(g);
        out["h"] = write_graph6(h);
        out["index"] = {{"ng", p.index.ng}, {"nh", p.index.nh}};
    }

    bool valid = validate(product, kind, w);
    int value = witness_value(w);
    out["kind"] = std::string(kind_name(kind));
    out["product"] = write_graph6(product);
    out["witness"] = witness_json(w);
    out["cardinality"] = value;
    out["valid"] = valid;
    bool ok = valid;
    if (expected) {
        out["expected"] = *expected;
        ok = ok && value == *expected;
    }
    if (a.optimal) {
        int opt = exact_invariant(product, kind);
        out["optimum"] = opt;
        out["optimal"] = opt == value;
        ok = ok && opt == value;
    }
    print(out);
    return ok ? kPass : kCounterexample;
}

struct VerifyArgs {
    std::vector<std::string> checks;
    std::string corpus;
    int cap = 0;
    std::string format = "json";
    std::string config;
    std::string g;
    std::string h;
    int workers = 0;
    std::string output;
    std::string perturb;
    bool grid = true;
};

int run_verify(const VerifyArgs& a) {
    CorpusConfig cfg;
    if (!a.config.empty()) apply_config_file(cfg, a.config);
    if (!a.corpus.empty()) cfg.source = a.corpus;
    if (a.cap > 0) cfg.product_cap = a.cap;
    if (a.workers > 0) cfg.workers = a.workers;
    auto format = parse_report_format(a.format);

    CorpusSpec corpus;
    if (!a.g.empty()) {
        std::optional<Graph> h;
        if (!a.h.empty()) h = graph_from_argument(a.h);
        corpus = replay_corpus(graph_from_argument(a.g), h, cfg);
    } else {
        if (!a.h.empty()) throw std::invalid_argument("--h needs --g");
        corpus = build_corpus(cfg);
    }

    std::vector<std::string> ids = a.checks.empty() ? check_ids() : a.checks;
    for (const auto& id : ids) check_title(id);  // reject unknown ids before running anything

    std::optional<PerturbedOracle> perturbed;
    if (!a.perturb.empty()) perturbed.emplace(parse_perturbation(a.perturb, default_oracle()));
    RunOptions opts{cfg.workers, perturbed ? &*perturbed : nullptr};
    std::vector<CheckReport> reports;
    bool failed = false;
    for (const auto& id : ids) {
        reports.push_back(run_check(id, corpus, opts));
        failed = failed || !reports.back().passed();
    }

    std::vector<GridCell> grid;
    if (format == ReportFormat::markdown && a.grid && a.g.empty())
        grid = formula_grid(cfg.grid_n_min, cfg.grid_n_max, {"complete:2", "path:4", "empty:3"}, cfg.product_cap);
    std::string text = emit_report(reports, format, grid);

    if (a.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(a.output);
        if (!out || !(out << text) || !out.flush()) throw std::invalid_argument("cannot write report to " + a.output);
    }
    return failed ? kCounterexample : kPass;
}

int run_hunt(const std::string& corpus, int n, bool connected, bool products_only) {
    std::vector<Graph> graphs;
    if (!corpus.empty()) {
        graphs = read_graph6_file(corpus);
    } else {
        GraphPredicate pred = connected ? GraphPredicate(predicates::connected) : GraphPredicate(predicates::no_isolated_vertex);
        for (int k = 2; k <= n; ++k)
            for (auto& g : enumerate_labeled_graphs(k, pred)) graphs.push_back(std::move(g));
    }
    auto hits = hunt_equality(graphs);
    json list = json::array();
    std::size_t products = 0;
    for (const auto& hit : hits) {
        if (products_only && !hit.factors) continue;
        json item = {{"graph", write_graph6(hit.graph)}, {"order", hit.graph.order()}, {"value", hit.value}};
        if (hit.factors) {
            ++products;
            item["factors"] = {{"g", write_graph6(hit.factors->first)}, {"h", write_graph6(hit.factors->second)}};
        } else {
            item["factors"] = nullptr;
        }
        list.push_back(item);
    }
    json out = {{"graphs", graphs.size()}, {"hits", hits.size()}, {"lex_products", products}, {"results", list}};
    print(out);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double and total Roman {2}-domination in lexicographic products"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", "lexdom 0.1.0");

    InvariantArgs inv;
    auto* c_inv = app.add_subcommand("invariant", "Exact value of one invariant");
    c_inv->add_option("--graph", inv.graph, "graph6 line or family spec")->required();
    c_inv->add_option("--kind", inv.kind, "g, gt, gx2, g2t, rho, gtr, gtr2")->required();
    c_inv->add_flag("--witness", inv.witness, "Include the lexicographically smallest optimal witness");
    c_inv->add_flag("--all-min", inv.all_min, "Count every optimal witness");
    c_inv->add_option("--limit", inv.limit, "Witnesses listed with --all-min")->capture_default_str();

    std::string pg, ph, emit = "graph6";
    auto* c_prod = app.add_subcommand("product", "Lexicographic product G o H");
    c_prod->add_option("--g", pg)->required();
    c_prod->add_option("--h", ph)->required();
    c_prod->add_option("--emit", emit)->check(CLI::IsMember({"graph6", "json"}))->capture_default_str();

    std::string fg, fh, fkind = "gx2";
    auto* c_form = app.add_subcommand("formula", "Closed formula for G o H");
    c_form->add_option("--g", fg, "family spec (any graph for --kind g or gt)")->required();
    c_form->add_option("--h", fh)->required();
    c_form->add_option("--kind", fkind)->check(CLI::IsMember({"gx2", "g", "gt"}))->capture_default_str();

    std::string bg, bh;
    bool b_oracle = false;
    auto* c_bounds = app.add_subcommand("bounds", "Every applicable bound on gx2(G o H)");
    c_bounds->add_option("--g", bg)->required();
    c_bounds->add_option("--h", bh)->required();
    c_bounds->add_flag("--oracle", b_oracle, "Also compute the exact value and check containment");

    ConstructArgs con;
    auto* c_con = app.add_subcommand("construct", "Explicit witness constructions");
    c_con->add_option("--scheme", con.scheme)
        ->required()
        ->check(CLI::IsMember({"path-g2", "small", "two-universal", "lift", "hk"}));
    c_con->add_option("--n", con.n, "path order for path-g2");
    c_con->add_option("--g", con.g);
    c_con->add_option("--h", con.h);
    c_con->add_option("--case", con.c, "i..vi for scheme small");
    c_con->add_option("--pair", con.pair, "dominating set of H, e.g. 1,2")->delimiter(',');
    c_con->add_option("--single", con.single, "vertex of H used for single dots");
    c_con->add_option("--g-set", con.g_set, "minimum dominating set of G for two-universal")->delimiter(',');
    c_con->add_option("--k", con.k, "cycle length for hk");
    c_con->add_option("--sizes", con.sizes, "clique sizes for hk")->delimiter(',');
    c_con->add_flag("--optimal", con.optimal, "Compare with the exact optimum");
    std::string con_emit = "json";
    c_con->add_option("--emit", con_emit)->check(CLI::IsMember({"json"}));

    VerifyArgs ver;
    bool no_grid = false;
    auto* c_ver = app.add_subcommand("verify", "Run the checks over a corpus");
    c_ver->add_option("--check", ver.checks, "V1..V16 (repeatable or comma separated)")->delimiter(',');
    c_ver->add_option("--corpus", ver.corpus, "default, empty or a graph6 file");
    c_ver->add_option("--cap", ver.cap, "product order cap")->check(CLI::Range(1, kMaxVertices));
    c_ver->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    c_ver->add_option("--config", ver.config, "key=value corpus overrides");
    c_ver->add_option("--g", ver.g, "replay a single graph or pair");
    c_ver->add_option("--h", ver.h);
    c_ver->add_option("--workers", ver.workers, "overrides LEXDOM_WORKERS")->check(CLI::PositiveNumber);
    c_ver->add_option("--output", ver.output, "write the report to a file");
    c_ver->add_option("--perturb", ver.perturb, "KIND:DELTA:MIN_ORDER, deliberately skew the oracle (harness self-test)");
    c_ver->add_flag("--no-grid", no_grid, "omit the formula grid from markdown");

    std::string hcorpus;
    int hn = 4;
    bool hconnected = false, hproducts = false;
    auto* c_hunt = app.add_subcommand("hunt", "Search for graphs with gx2 = gtr2");
    c_hunt->add_option("--corpus", hcorpus, "graph6 file");
    c_hunt->add_option("--n", hn, "labeled graphs of order 2..n")->check(CLI::Range(2, kDefaultEnumerationCap))->capture_default_str();
    c_hunt->add_flag("--connected", hconnected);
    c_hunt->add_flag("--products-only", hproducts, "only report lexicographic products");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*c_inv) return run_invariant(inv);
        if (*c_prod) return run_product(pg, ph, emit);
        if (*c_form) return run_formula(fg, fh, fkind);
        if (*c_bounds) return run_bounds(bg, bh, b_oracle);
        if (*c_con) return run_construct(con);
        if (*c_ver) {
            ver.grid = !no_grid;
            return run_verify(ver);
        }
        if (*c_hunt) return run_hunt(hcorpus, hn, hconnected, hproducts);
    } catch (const ConstructionError& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "construction"}}.dump() << '\n';
        return kCounterexample;
    } catch (const PremiseError& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "premise"}}.dump() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return kUsage;
    }
    return kUsage;
}
