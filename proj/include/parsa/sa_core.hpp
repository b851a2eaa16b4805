#pragma once

#include <cstdint>
#include <vector>

#include "parsa/objectives.hpp"
#include "parsa/rng.hpp"

namespace parsa {

enum class Precision { f64, f32 };

// Geometric cooling schedule: T_0, rho*T_0, ... while T > t_min, with a
// Markov chain of sweep_length Metropolis steps at each temperature.
struct AnnealSchedule {
    double t0 = 1.0;
    double t_min = 1e-3;
    double rho = 0.99;
    int sweep_length = 100;

    void validate() const;
};

struct LadderInfo {
    int levels = 0;
    std::vector<double> temperatures; // t0 * rho^i, strictly decreasing
};

struct ChainState {
    std::vector<double> x;
    double energy = 0.0;
    UniformStream stream;
};

// Temperature ladder by explicit iteration of the cooling loop (the closed
// form is avoided so boundary roundoff matches the loop the engines run).
LadderInfo ladder(const AnnealSchedule& sched);

// Total objective evaluations an engine performs: one initial evaluation per
// chain plus sweep_length per temperature level.
std::uint64_t expected_evaluations(const AnnealSchedule& sched, int n_chains);

// One proposal: pick a coordinate uniformly, resample it uniformly over its
// box interval. Consumes exactly 2 draws; the result is feasible by
// construction and differs from x in at most one coordinate.
std::vector<double> compute_neighbour(const std::vector<double>& x, const BoxDomain& domain,
                                      UniformStream& stream);

// Metropolis rule: always accept downhill, accept uphill with probability
// exp(-delta_e / temperature). Consumes exactly one draw regardless of the
// branch taken, so draw counts do not depend on the trajectory.
bool metropolis_accept(double delta_e, double temperature, UniformStream& stream,
                       Precision prec = Precision::f64);

// n_steps Metropolis steps at a fixed temperature. Exactly n_steps objective
// evaluations (added to eval_count) and 3*n_steps draws.
void metropolis_sweep(ChainState& state, const ObjectiveFunction& f, double temperature,
                      int n_steps, Precision prec, std::uint64_t& eval_count);

// Energy of x under the configured precision mode.
double chain_energy(const ObjectiveFunction& f, const std::vector<double>& x, Precision prec);

} // namespace parsa
