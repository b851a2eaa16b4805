#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parsa/objectives.hpp"
#include "parsa/sa_core.hpp"

namespace parsa {

enum class StartMode { shared_point, random_per_chain };

struct EngineConfig {
    int n_chains = 1;
    StartMode start_mode = StartMode::shared_point;
    std::vector<double> start_point; // empty => box center (shared mode)
    AnnealSchedule schedule;
    Precision precision = Precision::f64;
    std::uint64_t seed = 0;
    // OpenMP worker count for the chain loops; 1 runs the serial reference
    // path, 0 uses all hardware threads. Results are identical either way.
    int workers = 0;
};

struct TracePoint {
    int level = 0;
    std::uint64_t cumulative_evals = 0;
    double best_f = 0.0;
};

struct PhaseBreakdown {
    std::uint64_t sa_evaluations = 0;
    std::uint64_t refine_evaluations = 0;
    double sa_best_f = 0.0;
};

struct RunResult {
    std::vector<double> best_x;
    double best_f = 0.0;
    std::uint64_t evaluations = 0;
    double wall_time_s = 0.0;
    std::vector<TracePoint> trace; // one row per temperature level
    int winning_chain = 0;
    std::uint64_t rng_draws = 0;
    std::optional<PhaseBreakdown> phases; // set by hybrid runs
};

struct Candidate {
    std::vector<double> x;
    double f_value = 0.0;
    int chain_index = 0;
};

// Smallest f_value; ties broken by smallest chain_index, so any reduction
// order yields the same winner.
const Candidate& reduce_min(const std::vector<Candidate>& candidates);

// V0: the plain do-while cooling loop with a single chain.
RunResult run_sequential(const ObjectiveFunction& f, const EngineConfig& cfg);

// V1: independent full-ladder chains, one reduce over final states at the
// end. The per-level trace is diagnostic (min over the chains' running best).
RunResult run_asynchronous(const ObjectiveFunction& f, const EngineConfig& cfg);

// V2: chains sweep one temperature level from a shared start, a reduce-min
// picks the winner, and all chains restart from it at the next level.
RunResult run_synchronous(const ObjectiveFunction& f, const EngineConfig& cfg);

} // namespace parsa
