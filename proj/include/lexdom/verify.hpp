#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lexdom/families.hpp"
#include "lexdom/graph.hpp"
#include "lexdom/oracle.hpp"

namespace lexdom {

/// Knobs for building a corpus. Every field can be set from a key=value config file.
struct CorpusConfig {
    std::string source = "default";  // default | empty | path to a graph6 file
    int single_max = 6;              // isolated-free labeled graphs n = 2..single_max for single-graph checks
    int g_max = 4;                   // isolated-free labeled G, n = 2..g_max
    int h_max = 3;                   // all labeled H, n = 2..h_max
    bool grid = true;                // add the named-family grid
    int grid_n_min = 3;
    int grid_n_max = 10;
    std::vector<std::string> h_pool = {"complete:2", "path:3", "path:4", "cycle:4", "empty:2", "empty:3", "star:1,3"};
    int product_cap = 36;
    int reduced_cap = 20;     // checks that enumerate every minimum set
    int structural_cap = 21;  // projection-structure check (fits P_7 o N_3)
    int workers = 0;          // 0 = from LEXDOM_WORKERS or the hardware
};

/// Applies key=value lines (blank lines and '#' comments ignored). Throws std::invalid_argument
/// on unknown keys or bad values.
void apply_config_text(CorpusConfig& cfg, const std::string& text);
void apply_config_file(CorpusConfig& cfg, const std::string& path);

struct CorpusItem {
    Graph g;
    std::optional<Graph> h;            // absent for single-graph items
    std::optional<FamilySpec> g_spec;  // set when G is a canonical named-family instance
};

/// Materialized corpus: single graphs and (G, H) pairs, in a fixed order.
struct CorpusSpec {
    std::string name;
    std::vector<CorpusItem> singles;
    std::vector<CorpusItem> pairs;
    int product_cap = 36;
    int reduced_cap = 20;
    int structural_cap = 21;
};

CorpusSpec build_corpus(const CorpusConfig& cfg);
/// Graphs from a graph6 file used as singles and all ordered pairs of them.
CorpusSpec graph6_corpus(const std::string& path, const CorpusConfig& cfg);
/// A corpus with one single graph and, when h is given, the one pair (G, H).
CorpusSpec replay_corpus(const Graph& g, const std::optional<Graph>& h, const CorpusConfig& cfg);

/// Recognizes canonical labeled instances of the families with closed formulas.
std::optional<FamilySpec> detect_family(const Graph& g);

struct Counterexample {
    std::string g;  // graph6
    std::string h;  // graph6, empty for single-graph checks
    std::string observed;
    std::string expected;
};

struct CheckReport {
    std::string id;
    std::string title;
    std::size_t generated = 0;
    std::size_t tested = 0;
    std::map<std::string, std::size_t> skipped;  // reason -> count
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> warnings;
    double seconds = 0;

    bool passed() const { return counterexamples.empty(); }
    std::size_t skipped_total() const;
};

/// V1..V16.
std::vector<std::string> check_ids();
std::string check_title(const std::string& id);

/// Worker count from LEXDOM_WORKERS, else the hardware concurrency (at least 1).
int default_workers();

struct RunOptions {
    int workers = 0;  // 0 = default_workers()
    const InvariantOracle* oracle = nullptr;  // nullptr = default_oracle()
};

/// Runs one check over the whole corpus. Throws std::invalid_argument for an unknown id or a
/// product cap above kMaxVertices.
CheckReport run_check(const std::string& id, const CorpusSpec& corpus, const RunOptions& options = {});
std::vector<CheckReport> run_all(const CorpusSpec& corpus, const RunOptions& options = {});

/// A graph with gamma_x2 = gamma_t{R2}, and a lexicographic factorization when one exists.
struct HuntHit {
    Graph graph;
    int value = 0;
    std::optional<std::pair<Graph, Graph>> factors;  // (G, H), both nontrivial
};

std::vector<HuntHit> hunt_equality(const std::vector<Graph>& graphs, const InvariantOracle& oracle = default_oracle());

/// Nontrivial factors (G, H) with g isomorphic to G o H, found by trying every partition of the
/// vertices into equal blocks. Intended for small graphs (order <= 12).
std::optional<std::pair<Graph, Graph>> lex_factorization(const Graph& g);

enum class ReportFormat { json, csv, markdown };
ReportFormat parse_report_format(const std::string& name);

/// One cell of the path/cycle table: oracle value next to the closed formula.
struct GridCell {
    std::string g;  // family spec
    std::string h;  // family spec
    int gamma_h = 0;
    int oracle = 0;
    int formula = 0;
};

/// P_n o H and C_n o H for n in [n_min, n_max] and the given H representatives (one per gamma(H) regime).
std::vector<GridCell> formula_grid(int n_min, int n_max, const std::vector<std::string>& h_specs,
                                   int product_cap, const InvariantOracle& oracle = default_oracle());

/// Serializes reports; markdown appends the grid when one is passed.
std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format,
                        const std::vector<GridCell>& grid = {});

}  // namespace lexdom
