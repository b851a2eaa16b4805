// Command-line benchmark driver: list the suite, run replicated experiments,
// compare engines at a fixed budget, or dump a convergence trace.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "parsa/harness.hpp"

namespace {

using namespace parsa;

struct CommonFlags {
    std::string config;
    std::string function_id;
    std::string engine = "v2";
    double t0 = -1, tmin = -1, rho = -1;
    int chain_length = -1;
    std::string chains;
    std::string start;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int reps = -1;
    std::string precision;
    int workers = -1;
    std::string out_csv, summary_json, trace_csv;
};

void add_schedule_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config, "JSON config file (flags override it)");
    cmd->add_option("--function", flags.function_id, "function id, see list-functions");
    cmd->add_option("--t0", flags.t0, "initial temperature T0");
    cmd->add_option("--tmin", flags.tmin, "target temperature Tmin");
    cmd->add_option("--rho", flags.rho, "cooling factor in (0,1)");
    cmd->add_option("--chain-length", flags.chain_length, "Metropolis steps per level (N)");
    cmd->add_option("--chains", flags.chains, "chain count, plain or BxG (e.g. 256x64)");
    cmd->add_option("--start", flags.start, "start mode: shared|random");
    cmd->add_option("--seed", flags.seed, "master seed")->each([&](const std::string&) {
        flags.seed_set = true;
    });
    cmd->add_option("--reps", flags.reps, "replications (seeds seed, seed+1, ...)");
    cmd->add_option("--precision", flags.precision, "double|single");
    cmd->add_option("--workers", flags.workers, "worker threads (1 = serial, 0 = all cores)");
}

RunSpec build_spec(const CommonFlags& flags) {
    RunSpec spec;
    spec.replications = 1;
    if (!flags.config.empty())
        spec = run_spec_from_json_file(flags.config);
    if (!flags.function_id.empty()) spec.function_id = flags.function_id;
    if (!flags.engine.empty()) spec.engine = parse_engine(flags.engine);
    if (flags.t0 > 0) spec.schedule.t0 = flags.t0;
    if (flags.tmin > 0) spec.schedule.t_min = flags.tmin;
    if (flags.rho > 0) spec.schedule.rho = flags.rho;
    if (flags.chain_length > 0) spec.schedule.sweep_length = flags.chain_length;
    if (!flags.chains.empty()) spec.n_chains = parse_chain_count(flags.chains);
    if (!flags.start.empty()) {
        if (flags.start == "shared")
            spec.start_mode = StartMode::shared_point;
        else if (flags.start == "random")
            spec.start_mode = StartMode::random_per_chain;
        else
            throw CLI::ValidationError("--start", "expected shared|random");
    }
    if (flags.seed_set) spec.seed = flags.seed;
    if (flags.reps > 0) spec.replications = flags.reps;
    if (!flags.precision.empty()) {
        if (flags.precision == "double")
            spec.precision = Precision::f64;
        else if (flags.precision == "single")
            spec.precision = Precision::f32;
        else
            throw CLI::ValidationError("--precision", "expected double|single");
    }
    if (flags.workers >= 0) spec.workers = flags.workers;
    if (!flags.out_csv.empty()) spec.out_csv = flags.out_csv;
    if (!flags.summary_json.empty()) spec.summary_json = flags.summary_json;
    if (!flags.trace_csv.empty()) spec.trace_csv = flags.trace_csv;
    return spec;
}

std::string domain_text(const BoxDomain& box) {
    // compact "[lo,hi]^n" when the bounds repeat, per-coordinate otherwise
    bool uniform = true;
    for (int k = 1; k < box.dim(); ++k)
        uniform = uniform && box.lower[k] == box.lower[0] && box.upper[k] == box.upper[0];
    std::string text;
    if (uniform) {
        text = "[" + format_double(box.lower[0]) + "," + format_double(box.upper[0]) + "]^" +
               std::to_string(box.dim());
    } else {
        for (int k = 0; k < box.dim(); ++k) {
            if (k) text += "x";
            text += "[" + format_double(box.lower[k]) + "," + format_double(box.upper[k]) + "]";
        }
    }
    return text;
}

int cmd_list_functions() {
    std::printf("%-6s %-26s %5s %-18s %s\n", "id", "name", "n", "domain", "f_star");
    for (const auto& f : registry()) {
        std::printf("%-6s %-26s %5d %-18s %s\n", f.id.c_str(), f.name.c_str(), f.dim,
                    domain_text(f.domain).c_str(), format_double(f.reference.f_star).c_str());
    }
    return 0;
}

int cmd_run(const CommonFlags& flags) {
    const RunSpec spec = build_spec(flags);
    const auto report = run_spec(spec);
    std::cout << "function " << spec.function_id << ", engine " << engine_name(spec.engine)
              << ", " << report.rows.size() << " replication(s), " << report.evaluations
              << " evaluations each\n";
    std::cout << "value_error median " << format_double(report.value_error.median) << " (mean "
              << format_double(report.value_error.mean) << ", min "
              << format_double(report.value_error.min) << ", max "
              << format_double(report.value_error.max) << ")\n";
    if (report.location_error)
        std::cout << "location_error median " << format_double(report.location_error->median)
                  << "\n";
    else
        std::cout << "location_error -\n";
    std::cout << "wall_time_s median " << format_double(report.wall_time_s.median) << "\n";
    return 0;
}

int cmd_compare(const CommonFlags& flags, const std::vector<std::string>& engines,
                const std::string& out_csv) {
    std::vector<RunSpec> specs;
    for (const auto& name : engines) {
        CommonFlags one = flags;
        one.engine = name;
        specs.push_back(build_spec(one));
    }
    const auto table = compare_engines(specs);
    std::cout << table.to_text();
    if (!out_csv.empty()) {
        std::ofstream out(out_csv);
        if (!out)
            throw std::runtime_error("cannot open output file: " + out_csv);
        out << "engine,median_value_error,median_location_error,median_wall_time_s,"
               "time_ratio_vs_first\n";
        for (const auto& r : table.rows) {
            out << r.engine << ',' << format_double(r.median_value_error) << ','
                << (r.median_location_error ? format_double(*r.median_location_error)
                                            : std::string("-"))
                << ',' << format_double(r.median_wall_time_s) << ','
                << format_double(r.time_ratio_vs_first) << '\n';
        }
    }
    return 0;
}

int cmd_trace(const CommonFlags& flags) {
    CommonFlags one = flags;
    RunSpec spec = build_spec(one);
    spec.replications = 1;
    if (spec.trace_csv.empty())
        throw CLI::ValidationError("--out", "trace needs an output path");
    (void)run_spec(spec);
    std::cout << "trace written to " << spec.trace_csv << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel simulated annealing benchmark driver"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list-functions", "print the benchmark registry");

    CommonFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "run a replicated experiment");
    run_cmd->add_option("--engine", run_flags.engine, "v0|v1|v2|hybrid");
    add_schedule_flags(run_cmd, run_flags);
    run_cmd->add_option("--out", run_flags.out_csv, "per-replication CSV");
    run_cmd->add_option("--summary", run_flags.summary_json, "JSON summary");
    run_cmd->add_option("--trace", run_flags.trace_csv, "per-level trace CSV");

    CommonFlags cmp_flags;
    std::vector<std::string> cmp_engines{"v1", "v2"};
    std::string cmp_out;
    auto* cmp_cmd = app.add_subcommand("compare", "engines side by side at equal budget");
    cmp_cmd->add_option("--engines", cmp_engines, "engines to compare")->delimiter(',');
    add_schedule_flags(cmp_cmd, cmp_flags);
    cmp_cmd->add_option("--out", cmp_out, "comparison CSV");

    CommonFlags trace_flags;
    auto* trace_cmd = app.add_subcommand("trace", "single run, write the convergence trace");
    trace_cmd->add_option("--engine", trace_flags.engine, "v0|v1|v2|hybrid");
    add_schedule_flags(trace_cmd, trace_flags);
    trace_cmd->add_option("--out", trace_flags.trace_csv, "trace CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed())
            return cmd_list_functions();
        if (run_cmd->parsed())
            return cmd_run(run_flags);
        if (cmp_cmd->parsed())
            return cmd_compare(cmp_flags, cmp_engines, cmp_out);
        if (trace_cmd->parsed())
            return cmd_trace(trace_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
