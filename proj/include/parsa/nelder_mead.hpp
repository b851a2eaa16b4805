#pragma once

#include <cstdint>
#include <vector>

#include "parsa/engines.hpp"
#include "parsa/objectives.hpp"

namespace parsa {

struct NelderMeadConfig {
    double reflect = 1.0;
    double expand = 2.0;
    double contract = 0.5;
    double shrink = 0.5;
    double f_tol = 1e-12; // stop when best..worst value spread falls below
    double x_tol = 1e-10; // stop when the simplex diameter falls below
    int max_iters = 0;    // 0 => 50000 * n

    void validate() const;
    int effective_max_iters(int n) const { return max_iters > 0 ? max_iters : 50000 * n; }
};

struct NelderMeadResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    int iterations = 0;
    std::uint64_t evaluations = 0;
};

// Downhill simplex with box handling by coordinate-wise clamping of every
// candidate before evaluation. The initial simplex offsets each coordinate of
// the start point by 5% of its box width (sign flipped if that would leave
// the box), so all evaluated points are feasible.
NelderMeadResult nelder_mead_minimize(const ObjectiveFunction& f,
                                      const std::vector<double>& x_start,
                                      const NelderMeadConfig& cfg);

// Truncated synchronous SA run followed by a Nelder-Mead polish from its best
// point. Evaluations and times of both phases are reported separately in
// RunResult::phases and summed in the headline fields; the polish is appended
// to the trace as one extra row past the last temperature level.
RunResult hybrid_run(const ObjectiveFunction& f, const EngineConfig& cfg,
                     const AnnealSchedule& truncated_sched, const NelderMeadConfig& nm_cfg);

} // namespace parsa
