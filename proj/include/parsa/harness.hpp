#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parsa/engines.hpp"
#include "parsa/nelder_mead.hpp"

namespace parsa {

enum class Engine { v0, v1, v2, hybrid };

std::string engine_name(Engine e);
Engine parse_engine(const std::string& name);

// Accepts either a plain count ("16384") or a block-times-grid pair
// ("256x64").
int parse_chain_count(const std::string& text);

// One benchmark experiment: a function, an engine, a schedule, and a number
// of replications run with seeds seed, seed+1, ...
struct RunSpec {
    std::string function_id;
    Engine engine = Engine::v2;
    AnnealSchedule schedule;
    int n_chains = 1;
    StartMode start_mode = StartMode::shared_point;
    std::vector<double> start_point; // empty => box center
    std::uint64_t seed = 0;
    int replications = 30;
    // Replications run one after another by default; set this to fan them
    // out over OpenMP instead. Engine results do not depend on scheduling,
    // so the report is identical either way (wall times aside).
    bool concurrent_replications = false;
    Precision precision = Precision::f64;
    int workers = 0;
    NelderMeadConfig nm; // hybrid only
    std::string out_csv;      // per-replication rows; empty => not written
    std::string summary_json; // aggregate summary; empty => not written
    std::string trace_csv;    // per-level traces; empty => not written

    void validate() const;
};

struct ReplicationRow {
    std::uint64_t seed = 0;
    double best_f = 0.0;
    double value_error = 0.0;
    std::optional<double> location_error; // empty when the minimizer is unknown
    std::uint64_t evaluations = 0;
    double wall_time_s = 0.0;
};

struct Aggregate {
    double median = 0.0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

Aggregate aggregate(const std::vector<double>& values);

struct ReplicationReport {
    RunSpec spec;
    std::vector<ReplicationRow> rows;
    Aggregate value_error;
    std::optional<Aggregate> location_error;
    Aggregate wall_time_s;
    Aggregate best_f;
    std::uint64_t evaluations = 0; // identical across replications
};

// Runs all replications, computes the error metrics, cross-checks the
// evaluation counter against expected_evaluations, and writes any configured
// output files.
ReplicationReport run_spec(const RunSpec& spec);

// Convergence trace: one row per temperature level with the running best and
// its value error. For hybrid runs the final row is the Nelder-Mead polish.
void emit_trace(const RunResult& result, const ObjectiveFunction& f, const std::string& path);

struct ComparisonRow {
    std::string engine;
    double median_value_error = 0.0;
    std::optional<double> median_location_error;
    double median_wall_time_s = 0.0;
    double time_ratio_vs_first = 1.0;
};

struct ComparisonTable {
    std::string function_id;
    std::uint64_t evaluations = 0;
    std::vector<ComparisonRow> rows;

    std::string to_text() const;
};

// Side-by-side engine comparison at a shared evaluation budget; throws with
// both counts when the budgets differ.
ComparisonTable compare_engines(const std::vector<RunSpec>& specs);

// JSON config mirror of RunSpec (see docs/reporting.md for the schema).
RunSpec run_spec_from_json_file(const std::string& path);
void apply_json(RunSpec& spec, const std::string& json_text);
std::string summary_to_json(const ReplicationReport& report);

// Round-trip (shortest exact) decimal formatting used in all reports.
std::string format_double(double v);

} // namespace parsa
