#include "parsa/engines.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace parsa {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Chain loop dispatcher: workers == 1 is the serial reference path, anything
// else fans out over OpenMP. Chains never share mutable state, and every
// reduction below is a serial scan over chain index, so results are bitwise
// identical for any worker count.
template <class Fn>
void for_each_chain(int n_chains, int workers, Fn&& body) {
    if (workers == 1 || n_chains == 1) {
        for (int c = 0; c < n_chains; ++c)
            body(c);
        return;
    }
    const int nt = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int c = 0; c < n_chains; ++c)
        body(c);
}

std::vector<double> resolve_start(const ObjectiveFunction& f, const EngineConfig& cfg) {
    std::vector<double> start = cfg.start_point.empty() ? f.domain.center() : cfg.start_point;
    if (!contains(f.domain, start))
        throw std::invalid_argument("infeasible start point for " + f.id);
    return start;
}

void draw_random_start(std::vector<double>& x, const BoxDomain& box, UniformStream& stream) {
    for (int k = 0; k < box.dim(); ++k)
        x[k] = box.lower[k] + stream.next_uniform() * box.width(k);
}

std::uint64_t cumulative_evals_at(const EngineConfig& cfg, int level) {
    return static_cast<std::uint64_t>(cfg.n_chains) *
           (1 + static_cast<std::uint64_t>(cfg.schedule.sweep_length) * (level + 1));
}

} // namespace

const Candidate& reduce_min(const std::vector<Candidate>& candidates) {
    if (candidates.empty())
        throw std::invalid_argument("reduce_min: empty candidate list");
    const Candidate* best = &candidates.front();
    for (const auto& c : candidates)
        if (c.f_value < best->f_value ||
            (c.f_value == best->f_value && c.chain_index < best->chain_index))
            best = &c;
    return *best;
}

RunResult run_asynchronous(const ObjectiveFunction& f, const EngineConfig& cfg) {
    const auto t_start = Clock::now();
    cfg.schedule.validate();
    if (cfg.n_chains < 1)
        throw std::invalid_argument("run_asynchronous: need n_chains >= 1");
    const LadderInfo lad = ladder(cfg.schedule);
    const int n_chains = cfg.n_chains;
    const std::vector<double> shared_start = resolve_start(f, cfg);

    std::vector<ChainState> states(n_chains);
    std::vector<std::uint64_t> evals(n_chains, 0);
    // Running best per (chain, level): best level-end energy the chain has
    // seen so far, seeded with its start energy. Feeds the diagnostic trace.
    std::vector<double> best_by_level(static_cast<std::size_t>(n_chains) * lad.levels);

    for_each_chain(n_chains, cfg.workers, [&](int c) {
        ChainState& st = states[c];
        st.stream = make_stream({cfg.seed, static_cast<std::uint32_t>(c), 0});
        st.x = shared_start;
        if (cfg.start_mode == StartMode::random_per_chain)
            draw_random_start(st.x, f.domain, st.stream);
        st.energy = chain_energy(f, st.x, cfg.precision);
        evals[c] = 1;

        double chain_best = st.energy;
        for (int l = 0; l < lad.levels; ++l) {
            metropolis_sweep(st, f, lad.temperatures[l], cfg.schedule.sweep_length,
                             cfg.precision, evals[c]);
            chain_best = std::min(chain_best, st.energy);
            best_by_level[static_cast<std::size_t>(c) * lad.levels + l] = chain_best;
        }
    });

    RunResult res;
    res.trace.reserve(lad.levels);
    for (int l = 0; l < lad.levels; ++l) {
        double m = std::numeric_limits<double>::infinity();
        for (int c = 0; c < n_chains; ++c)
            m = std::min(m, best_by_level[static_cast<std::size_t>(c) * lad.levels + l]);
        res.trace.push_back({l, cumulative_evals_at(cfg, l), m});
    }

    // The final reduce is over the chains' end states, as in the one-shot
    // kernel: a chain reports where it stopped, not the best point it visited.
    int winner = 0;
    for (int c = 1; c < n_chains; ++c)
        if (states[c].energy < states[winner].energy)
            winner = c;
    res.best_x = states[winner].x;
    res.best_f = states[winner].energy;
    res.winning_chain = winner;
    for (int c = 0; c < n_chains; ++c) {
        res.evaluations += evals[c];
        res.rng_draws += states[c].stream.draws();
    }
    res.wall_time_s = elapsed_seconds(t_start);
    return res;
}

RunResult run_sequential(const ObjectiveFunction& f, const EngineConfig& cfg) {
    if (cfg.n_chains != 1)
        throw std::invalid_argument("run_sequential: requires n_chains == 1");
    return run_asynchronous(f, cfg);
}

RunResult run_synchronous(const ObjectiveFunction& f, const EngineConfig& cfg) {
    const auto t_start = Clock::now();
    cfg.schedule.validate();
    if (cfg.n_chains < 1)
        throw std::invalid_argument("run_synchronous: need n_chains >= 1");
    const LadderInfo lad = ladder(cfg.schedule);
    const int n_chains = cfg.n_chains;
    const int sweep_n = cfg.schedule.sweep_length;
    const std::vector<double> shared_start = resolve_start(f, cfg);

    std::vector<ChainState> states(n_chains);
    std::vector<std::uint64_t> evals(n_chains, 0);
    std::vector<std::uint64_t> draws(n_chains, 0);

    RunResult res;
    res.best_f = std::numeric_limits<double>::infinity();
    res.trace.reserve(lad.levels);

    // Level 0 starts: every chain evaluates its own start point (the shared
    // one, or a private random draw), which is the one initial evaluation per
    // chain in the budget.
    for_each_chain(n_chains, cfg.workers, [&](int c) {
        ChainState& st = states[c];
        st.stream = make_stream({cfg.seed, static_cast<std::uint32_t>(c), 0});
        st.x = shared_start;
        if (cfg.start_mode == StartMode::random_per_chain)
            draw_random_start(st.x, f.domain, st.stream);
        st.energy = chain_energy(f, st.x, cfg.precision);
        evals[c] = 1;
    });
    for (int c = 0; c < n_chains; ++c) {
        if (states[c].energy < res.best_f) {
            res.best_f = states[c].energy;
            res.best_x = states[c].x;
            res.winning_chain = c;
        }
    }

    std::vector<double> level_start = res.best_x;
    double level_start_e = res.best_f;
    for (int l = 0; l < lad.levels; ++l) {
        const double temperature = lad.temperatures[l];
        for_each_chain(n_chains, cfg.workers, [&](int c) {
            ChainState& st = states[c];
            if (l > 0) {
                st.stream = make_stream({cfg.seed, static_cast<std::uint32_t>(c),
                                         static_cast<std::uint32_t>(l)});
                st.x = level_start;
                st.energy = level_start_e;
            }
            metropolis_sweep(st, f, temperature, sweep_n, cfg.precision, evals[c]);
            draws[c] += st.stream.draws();
        });

        // reduce-min over this level's end states; the winner seeds every
        // chain at the next temperature.
        int winner = 0;
        for (int c = 1; c < n_chains; ++c)
            if (states[c].energy < states[winner].energy)
                winner = c;
        level_start = states[winner].x;
        level_start_e = states[winner].energy;
        if (level_start_e < res.best_f) {
            res.best_f = level_start_e;
            res.best_x = level_start;
            res.winning_chain = winner;
        }
        res.trace.push_back({l, cumulative_evals_at(cfg, l), res.best_f});
    }

    for (int c = 0; c < n_chains; ++c)
        res.evaluations += evals[c];
    for (int c = 0; c < n_chains; ++c)
        res.rng_draws += draws[c];
    res.wall_time_s = elapsed_seconds(t_start);
    return res;
}

} // namespace parsa
