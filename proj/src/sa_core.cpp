#include "parsa/sa_core.hpp"

#include <cmath>
#include <stdexcept>

namespace parsa {

void AnnealSchedule::validate() const {
    if (!(t0 > 0) || !(t_min > 0) || !(t_min < t0))
        throw std::invalid_argument("schedule: need 0 < t_min < t0");
    if (!(rho > 0) || !(rho < 1))
        throw std::invalid_argument("schedule: need rho in (0,1)");
    if (sweep_length < 1)
        throw std::invalid_argument("schedule: need sweep_length >= 1");
}

LadderInfo ladder(const AnnealSchedule& sched) {
    sched.validate();
    LadderInfo info;
    double t = sched.t0;
    do {
        info.temperatures.push_back(t);
        t *= sched.rho;
    } while (t > sched.t_min);
    info.levels = static_cast<int>(info.temperatures.size());
    return info;
}

std::uint64_t expected_evaluations(const AnnealSchedule& sched, int n_chains) {
    if (n_chains < 1)
        throw std::invalid_argument("expected_evaluations: need n_chains >= 1");
    const std::uint64_t levels = static_cast<std::uint64_t>(ladder(sched).levels);
    return static_cast<std::uint64_t>(n_chains) *
           (1 + static_cast<std::uint64_t>(sched.sweep_length) * levels);
}

std::vector<double> compute_neighbour(const std::vector<double>& x, const BoxDomain& domain,
                                      UniformStream& stream) {
    std::vector<double> out = x;
    const int d = stream.next_coordinate_index(domain.dim());
    const double u = stream.next_uniform();
    out[d] = domain.lower[d] + u * domain.width(d);
    return out;
}

bool metropolis_accept(double delta_e, double temperature, UniformStream& stream,
                       Precision prec) {
    const double u = stream.next_uniform(); // consumed on every step
    if (delta_e <= 0)
        return true;
    if (prec == Precision::f32)
        return static_cast<float>(u) <=
               std::exp(-static_cast<float>(delta_e) / static_cast<float>(temperature));
    return u <= std::exp(-delta_e / temperature);
}

double chain_energy(const ObjectiveFunction& f, const std::vector<double>& x, Precision prec) {
    return prec == Precision::f32 ? evaluate_single(f, x) : evaluate(f, x);
}

void metropolis_sweep(ChainState& state, const ObjectiveFunction& f, double temperature,
                      int n_steps, Precision prec, std::uint64_t& eval_count) {
    const BoxDomain& box = f.domain;
    const int n = box.dim();
    for (int step = 0; step < n_steps; ++step) {
        // In-place equivalent of compute_neighbour: touch one coordinate,
        // restore it on rejection. Same draws in the same order.
        const int d = state.stream.next_coordinate_index(n);
        const double u = state.stream.next_uniform();
        const double old = state.x[d];
        state.x[d] = box.lower[d] + u * box.width(d);
        const double trial = chain_energy(f, state.x, prec);
        ++eval_count;
        if (metropolis_accept(trial - state.energy, temperature, state.stream, prec))
            state.energy = trial;
        else
            state.x[d] = old;
    }
}

} // namespace parsa
