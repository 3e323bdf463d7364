#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "lexdom/constructions.hpp"
#include "lexdom/families.hpp"
#include "lexdom/formulas.hpp"
#include "lexdom/graph6.hpp"
#include "lexdom/invariants.hpp"
#include "lexdom/product.hpp"
#include "lexdom/verify.hpp"

namespace py = pybind11;
using namespace lexdom;

namespace {

py::object witness_to_py(const Witness& w) {
    if (const auto* s = std::get_if<VertexSet>(&w)) return py::cast(s->members());
    const auto& f = std::get<WeightFn>(w);
    return py::cast(std::vector<int>(f.values().begin(), f.values().end()));
}

std::optional<VertexSet> to_set(const std::optional<std::vector<int>>& v) {
    if (!v) return std::nullopt;
    return VertexSet::from_members(*v);
}

py::dict terms_to_py(const FormulaResult& r) {
    auto terms = [](const std::vector<BoundTerm>& ts) {
        py::list out;
        for (const auto& t : ts) {
            py::dict d;
            d["value"] = t.value;
            d["source"] = t.source;
            d["premise"] = t.premise;
            out.append(d);
        }
        return out;
    };
    py::dict d;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["exact"] = r.exact();
    d["value"] = r.exact() ? py::object(py::int_(r.lower)) : py::none();
    d["source"] = r.source;
    d["assumptions"] = r.assumptions;
    d["lower_terms"] = terms(r.lower_terms);
    d["upper_terms"] = terms(r.upper_terms);
    return d;
}

std::string verify_json(const std::vector<std::string>& checks, const std::string& config, const std::string& corpus,
                        int cap, int workers) {
    CorpusConfig cfg;
    if (!config.empty()) apply_config_text(cfg, config);
    if (!corpus.empty()) cfg.source = corpus;
    if (cap > 0) cfg.product_cap = cap;
    if (workers > 0) cfg.workers = workers;
    auto spec = build_corpus(cfg);
    std::vector<CheckReport> reports;
    {
        py::gil_scoped_release release;
        for (const auto& id : checks.empty() ? check_ids() : checks) reports.push_back(run_check(id, spec, {cfg.workers, nullptr}));
    }
    return emit_report(reports, ReportFormat::json);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact domination invariants of lexicographic products";

    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    py::register_exception<PremiseError>(m, "PremiseError", PyExc_ValueError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::string& text) { return graph_from_argument(text); }), py::arg("text"),
             "graph6 line or family spec such as path:7")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def("edges", &Graph::edges)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });
    py::implicitly_convertible<py::str, Graph>();

    m.def("kinds", [] {
        std::vector<std::string> out;
        for (auto k : kAllKinds) out.emplace_back(kind_name(k));
        return out;
    });

    m.def(
        "invariant", [](const Graph& g, const std::string& kind) { return exact_invariant(g, parse_kind(kind)); },
        py::arg("graph"), py::arg("kind"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "min_witness",
        [](const Graph& g, const std::string& kind) {
            Witness w;
            {
                py::gil_scoped_release release;
                w = min_witness(g, parse_kind(kind));
            }
            return py::make_tuple(witness_value(w), witness_to_py(w));
        },
        py::arg("graph"), py::arg("kind"));
    m.def(
        "count_minimum",
        [](const Graph& g, const std::string& kind) {
            return for_each_optimal_witness(g, parse_kind(kind), [](const Witness&) { return true; });
        },
        py::arg("graph"), py::arg("kind"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "validate",
        [](const Graph& g, const std::string& kind, const std::vector<int>& w) {
            auto k = parse_kind(kind);
            if (is_set_valued(k)) return validate(g, k, VertexSet::from_members(w));
            std::vector<std::uint8_t> values(w.begin(), w.end());
            return validate(g, k, WeightFn(values));
        },
        py::arg("graph"), py::arg("kind"), py::arg("witness"));

    m.def(
        "lex_product",
        [](const Graph& g, const Graph& h) {
            auto p = lex_product(g, h);
            return py::make_tuple(p.graph, p.index.ng, p.index.nh);
        },
        py::arg("g"), py::arg("h"));

    m.def(
        "formula",
        [](const std::string& g, const Graph& h) { return terms_to_py(gamma_x2_lex_formula(parse_family_spec(g), h)); },
        py::arg("g"), py::arg("h"));
    m.def(
        "bounds", [](const Graph& g, const Graph& h) { return terms_to_py(gamma_x2_lex_bounds(g, h)); }, py::arg("g"),
        py::arg("h"));
    m.def(
        "classify_small_value",
        [](const Graph& g, const Graph& h) {
            auto c = classify_small_value(g, h);
            py::dict d;
            d["value"] = to_string(c.value);
            d["case"] = c.matched ? py::object(py::str(to_string(*c.matched))) : py::none();
            std::vector<std::string> all;
            for (auto x : c.all_matches) all.push_back(to_string(x));
            d["all_cases"] = all;
            return d;
        },
        py::arg("g"), py::arg("h"));

    m.def("path_scheme_row", &path_scheme_row, py::arg("n"));
    m.def("path_scheme_size", &path_scheme_size, py::arg("n"));
    m.def(
        "path_scheme_gamma2",
        [](int n, const Graph& h, std::optional<std::vector<int>> pair, std::optional<int> single) {
            return path_scheme_gamma2(n, h, to_set(pair), single).members();
        },
        py::arg("n"), py::arg("h"), py::arg("pair") = py::none(), py::arg("single") = py::none());
    m.def(
        "small_value_witness",
        [](const Graph& g, const Graph& h, int c, std::optional<std::vector<int>> pair) {
            if (c < 1 || c > 6) throw std::invalid_argument("case must be 1..6");
            return small_value_witness(g, h, static_cast<SmallValueCase>(c), to_set(pair)).members();
        },
        py::arg("g"), py::arg("h"), py::arg("case"), py::arg("pair") = py::none());
    m.def(
        "two_universal_witness",
        [](const Graph& g, const Graph& h, std::optional<std::vector<int>> g_set) {
            return two_universal_witness(g, h, to_set(g_set)).members();
        },
        py::arg("g"), py::arg("h"), py::arg("g_set") = py::none());
    m.def(
        "universal_lift_witness",
        [](const Graph& g, const Graph& h) {
            auto f = universal_lift_witness(g, h);
            return std::vector<int>(f.values().begin(), f.values().end());
        },
        py::arg("g"), py::arg("h"));
    m.def(
        "hk_witness", [](int k, const std::vector<int>& sizes) { return hk_witness(k, sizes).members(); }, py::arg("k"),
        py::arg("sizes"));

    m.def("check_ids", &check_ids);
    m.def("verify_json", &verify_json, py::arg("checks"), py::arg("config") = "", py::arg("corpus") = "",
          py::arg("cap") = 0, py::arg("workers") = 0);
    m.def(
        "hunt",
        [](const std::vector<Graph>& graphs) {
            std::vector<HuntHit> hits;
            {
                py::gil_scoped_release release;
                hits = hunt_equality(graphs);
            }
            py::list out;
            for (const auto& h : hits) {
                py::dict d;
                d["graph"] = h.graph;
                d["value"] = h.value;
                d["factors"] = h.factors ? py::object(py::make_tuple(h.factors->first, h.factors->second)) : py::none();
                out.append(d);
            }
            return out;
        },
        py::arg("graphs"));
}
