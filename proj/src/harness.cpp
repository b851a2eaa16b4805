#include "parsa/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace parsa {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

RunResult dispatch(const ObjectiveFunction& f, const RunSpec& spec, std::uint64_t seed) {
    EngineConfig cfg;
    cfg.n_chains = spec.n_chains;
    cfg.start_mode = spec.start_mode;
    cfg.start_point = spec.start_point;
    cfg.schedule = spec.schedule;
    cfg.precision = spec.precision;
    cfg.seed = seed;
    cfg.workers = spec.workers;
    switch (spec.engine) {
    case Engine::v0: return run_sequential(f, cfg);
    case Engine::v1: return run_asynchronous(f, cfg);
    case Engine::v2: return run_synchronous(f, cfg);
    case Engine::hybrid: return hybrid_run(f, cfg, spec.schedule, spec.nm);
    }
    throw std::logic_error("unreachable engine");
}

std::string trace_path_for(const RunSpec& spec, std::uint64_t seed) {
    if (spec.replications == 1)
        return spec.trace_csv;
    const auto dot = spec.trace_csv.rfind('.');
    const std::string stem = dot == std::string::npos ? spec.trace_csv : spec.trace_csv.substr(0, dot);
    const std::string ext = dot == std::string::npos ? "" : spec.trace_csv.substr(dot);
    return stem + "_seed" + std::to_string(seed) + ext;
}

} // namespace

std::string engine_name(Engine e) {
    switch (e) {
    case Engine::v0: return "v0";
    case Engine::v1: return "v1";
    case Engine::v2: return "v2";
    case Engine::hybrid: return "hybrid";
    }
    return "?";
}

Engine parse_engine(const std::string& name) {
    if (name == "v0") return Engine::v0;
    if (name == "v1") return Engine::v1;
    if (name == "v2") return Engine::v2;
    if (name == "hybrid") return Engine::hybrid;
    throw std::invalid_argument("unknown engine '" + name + "' (expected v0|v1|v2|hybrid)");
}

int parse_chain_count(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) {
            const int n = std::stoi(text);
            if (n < 1)
                throw std::invalid_argument("");
            return n;
        }
        const int block = std::stoi(text.substr(0, x));
        const int grid = std::stoi(text.substr(x + 1));
        if (block < 1 || grid < 1)
            throw std::invalid_argument("");
        return block * grid;
    } catch (const std::exception&) {
        throw std::invalid_argument("chains: expected a positive count or BxG, got '" + text +
                                    "'");
    }
}

void RunSpec::validate() const {
    schedule.validate();
    if (replications < 1)
        throw std::invalid_argument("spec: replications must be >= 1");
    if (n_chains < 1)
        throw std::invalid_argument("spec: chains must be >= 1");
    if (engine == Engine::v0 && n_chains != 1)
        throw std::invalid_argument("spec: engine v0 requires chains == 1");
    registry_get(function_id); // throws for unknown ids
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Aggregate aggregate(const std::vector<double>& values) {
    Aggregate a;
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    a.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    a.min = sorted.front();
    a.max = sorted.back();
    double sum = 0;
    for (double v : sorted)
        sum += v;
    a.mean = sum / static_cast<double>(n);
    return a;
}

void emit_trace(const RunResult& result, const ObjectiveFunction& f, const std::string& path) {
    if (result.trace.empty())
        throw std::invalid_argument("emit_trace: empty trace");
    auto out = open_out(path);
    out << "level,cumulative_evals,best_f,value_error\n";
    for (const auto& p : result.trace) {
        out << p.level << ',' << p.cumulative_evals << ',' << format_double(p.best_f) << ','
            << format_double(std::abs(p.best_f - f.reference.f_star)) << '\n';
    }
}

ReplicationReport run_spec(const RunSpec& spec) {
    spec.validate();
    const ObjectiveFunction& f = registry_get(spec.function_id);
    const std::uint64_t expected = expected_evaluations(spec.schedule, spec.n_chains);

    ReplicationReport report;
    report.spec = spec;
    report.rows.resize(spec.replications);

    const auto run_one = [&](int i) {
        const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
        const RunResult res = dispatch(f, spec, seed);

        const std::uint64_t sa_evals =
            res.phases ? res.phases->sa_evaluations : res.evaluations;
        if (sa_evals != expected) {
            std::ostringstream msg;
            msg << "evaluation accounting diverged for " << spec.function_id << ": measured "
                << sa_evals << ", expected " << expected;
            throw std::logic_error(msg.str());
        }

        ReplicationRow row;
        row.seed = seed;
        row.best_f = res.best_f;
        row.value_error = std::abs(res.best_f - f.reference.f_star);
        if (f.reference.location_known)
            row.location_error = location_error(f, res.best_x);
        row.evaluations = res.evaluations;
        row.wall_time_s = res.wall_time_s;
        report.rows[i] = row;

        if (!spec.trace_csv.empty())
            emit_trace(res, f, trace_path_for(spec, seed));
    };
    if (spec.concurrent_replications) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < spec.replications; ++i) {
            try {
                run_one(i);
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (int i = 0; i < spec.replications; ++i)
            run_one(i);
    }

    std::vector<double> value_errors, location_errors, times, bests;
    for (const auto& row : report.rows) {
        value_errors.push_back(row.value_error);
        if (row.location_error)
            location_errors.push_back(*row.location_error);
        times.push_back(row.wall_time_s);
        bests.push_back(row.best_f);
    }
    // the fixed annealing budget; hybrid rows additionally carry their
    // (seed-dependent) polish evaluations
    report.evaluations = expected;
    report.value_error = aggregate(value_errors);
    if (!location_errors.empty())
        report.location_error = aggregate(location_errors);
    report.wall_time_s = aggregate(times);
    report.best_f = aggregate(bests);

    if (!spec.out_csv.empty()) {
        auto out = open_out(spec.out_csv);
        out << "seed,best_f,value_error,location_error,evaluations,wall_time_s\n";
        for (const auto& r : report.rows) {
            out << r.seed << ',' << format_double(r.best_f) << ','
                << format_double(r.value_error) << ','
                << (r.location_error ? format_double(*r.location_error) : std::string("-"))
                << ',' << r.evaluations << ',' << format_double(r.wall_time_s) << '\n';
        }
    }
    if (!spec.summary_json.empty()) {
        auto out = open_out(spec.summary_json);
        out << summary_to_json(report) << '\n';
    }
    return report;
}

ComparisonTable compare_engines(const std::vector<RunSpec>& specs) {
    if (specs.empty())
        throw std::invalid_argument("compare_engines: no specs");
    ComparisonTable table;
    table.function_id = specs.front().function_id;
    table.evaluations = expected_evaluations(specs.front().schedule, specs.front().n_chains);
    for (const auto& s : specs) {
        if (s.function_id != table.function_id)
            throw std::invalid_argument("compare_engines: specs target different functions");
        const std::uint64_t budget = expected_evaluations(s.schedule, s.n_chains);
        if (budget != table.evaluations) {
            std::ostringstream msg;
            msg << "compare_engines: budget mismatch, " << engine_name(specs.front().engine)
                << " performs " << table.evaluations << " evaluations but "
                << engine_name(s.engine) << " performs " << budget;
            throw std::invalid_argument(msg.str());
        }
    }
    for (const auto& s : specs) {
        RunSpec quiet = s;
        quiet.out_csv.clear();
        quiet.summary_json.clear();
        quiet.trace_csv.clear();
        const ReplicationReport rep = run_spec(quiet);
        ComparisonRow row;
        row.engine = engine_name(s.engine);
        row.median_value_error = rep.value_error.median;
        if (rep.location_error)
            row.median_location_error = rep.location_error->median;
        row.median_wall_time_s = rep.wall_time_s.median;
        row.time_ratio_vs_first = table.rows.empty()
                                      ? 1.0
                                      : row.median_wall_time_s / table.rows.front().median_wall_time_s;
        table.rows.push_back(row);
    }
    return table;
}

std::string ComparisonTable::to_text() const {
    std::ostringstream out;
    out << "function " << function_id << ", evaluations per run " << evaluations << "\n";
    out << "engine  median|fa-fr|  median_loc_err  median_time_s  time_vs_first\n";
    for (const auto& r : rows) {
        out << r.engine << "  " << format_double(r.median_value_error) << "  "
            << (r.median_location_error ? format_double(*r.median_location_error)
                                        : std::string("-"))
            << "  " << format_double(r.median_wall_time_s) << "  "
            << format_double(r.time_ratio_vs_first) << "\n";
    }
    return out.str();
}

namespace {

AnnealSchedule schedule_from_json(const json& j, AnnealSchedule base) {
    if (j.contains("t0")) base.t0 = j.at("t0").get<double>();
    if (j.contains("tmin")) base.t_min = j.at("tmin").get<double>();
    if (j.contains("rho")) base.rho = j.at("rho").get<double>();
    if (j.contains("chain_length")) base.sweep_length = j.at("chain_length").get<int>();
    return base;
}

} // namespace

void apply_json(RunSpec& spec, const std::string& json_text) {
    const json j = json::parse(json_text);
    if (j.contains("function")) spec.function_id = j.at("function").get<std::string>();
    if (j.contains("engine")) spec.engine = parse_engine(j.at("engine").get<std::string>());
    spec.schedule = schedule_from_json(j, spec.schedule);
    if (j.contains("chains")) {
        if (j.at("chains").is_string())
            spec.n_chains = parse_chain_count(j.at("chains").get<std::string>());
        else
            spec.n_chains = j.at("chains").get<int>();
    }
    if (j.contains("start")) {
        const std::string s = j.at("start").get<std::string>();
        if (s == "shared")
            spec.start_mode = StartMode::shared_point;
        else if (s == "random")
            spec.start_mode = StartMode::random_per_chain;
        else
            throw std::invalid_argument("config: start must be shared|random");
    }
    if (j.contains("start_point"))
        spec.start_point = j.at("start_point").get<std::vector<double>>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("reps")) spec.replications = j.at("reps").get<int>();
    if (j.contains("concurrent_reps"))
        spec.concurrent_replications = j.at("concurrent_reps").get<bool>();
    if (j.contains("precision")) {
        const std::string p = j.at("precision").get<std::string>();
        if (p == "double")
            spec.precision = Precision::f64;
        else if (p == "single")
            spec.precision = Precision::f32;
        else
            throw std::invalid_argument("config: precision must be double|single");
    }
    if (j.contains("workers")) spec.workers = j.at("workers").get<int>();
    if (j.contains("out")) spec.out_csv = j.at("out").get<std::string>();
    if (j.contains("summary")) spec.summary_json = j.at("summary").get<std::string>();
    if (j.contains("trace")) spec.trace_csv = j.at("trace").get<std::string>();
    if (j.contains("nm")) {
        const json& n = j.at("nm");
        if (n.contains("reflect")) spec.nm.reflect = n.at("reflect").get<double>();
        if (n.contains("expand")) spec.nm.expand = n.at("expand").get<double>();
        if (n.contains("contract")) spec.nm.contract = n.at("contract").get<double>();
        if (n.contains("shrink")) spec.nm.shrink = n.at("shrink").get<double>();
        if (n.contains("f_tol")) spec.nm.f_tol = n.at("f_tol").get<double>();
        if (n.contains("x_tol")) spec.nm.x_tol = n.at("x_tol").get<double>();
        if (n.contains("max_iters")) spec.nm.max_iters = n.at("max_iters").get<int>();
    }
}

RunSpec run_spec_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    RunSpec spec;
    apply_json(spec, buf.str());
    return spec;
}

std::string summary_to_json(const ReplicationReport& report) {
    const ObjectiveFunction& f = registry_get(report.spec.function_id);
    json j;
    j["spec"] = {{"function", report.spec.function_id},
                 {"engine", engine_name(report.spec.engine)},
                 {"t0", report.spec.schedule.t0},
                 {"tmin", report.spec.schedule.t_min},
                 {"rho", report.spec.schedule.rho},
                 {"chain_length", report.spec.schedule.sweep_length},
                 {"chains", report.spec.n_chains},
                 {"start", report.spec.start_mode == StartMode::shared_point ? "shared"
                                                                             : "random"},
                 {"seed", report.spec.seed},
                 {"reps", report.spec.replications},
                 {"precision", report.spec.precision == Precision::f64 ? "double" : "single"},
                 {"workers", report.spec.workers}};
    j["function"] = {{"id", f.id},
                     {"name", f.name},
                     {"dim", f.dim},
                     {"f_star", f.reference.f_star},
                     {"location_known", f.reference.location_known}};
    j["evaluations"] = report.evaluations;
    j["expected_evaluations"] = expected_evaluations(report.spec.schedule, report.spec.n_chains);
    auto agg = [](const Aggregate& a) {
        return json{{"median", a.median}, {"mean", a.mean}, {"min", a.min}, {"max", a.max}};
    };
    j["value_error"] = agg(report.value_error);
    j["location_error"] = report.location_error ? agg(*report.location_error) : json(nullptr);
    j["wall_time_s"] = agg(report.wall_time_s);
    j["best_f"] = agg(report.best_f);
    return j.dump(2);
}

} // namespace parsa
