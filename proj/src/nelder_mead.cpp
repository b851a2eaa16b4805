#include "parsa/nelder_mead.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace parsa {
namespace {

struct Vertex {
    std::vector<double> x;
    double f = 0.0;
};

void clamp_to_box(std::vector<double>& x, const BoxDomain& box) {
    for (int k = 0; k < box.dim(); ++k)
        x[k] = std::clamp(x[k], box.lower[k], box.upper[k]);
}

double simplex_diameter(const std::vector<Vertex>& v) {
    double d = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t k = 0; k < v[0].x.size(); ++k)
            d = std::max(d, std::abs(v[i].x[k] - v[0].x[k]));
    return d;
}

} // namespace

void NelderMeadConfig::validate() const {
    if (!(reflect > 0) || !(expand > 1) || !(contract > 0) || !(contract < 1) ||
        !(shrink > 0) || !(shrink < 1))
        throw std::invalid_argument("nelder-mead: coefficient out of range");
}

NelderMeadResult nelder_mead_minimize(const ObjectiveFunction& f,
                                      const std::vector<double>& x_start,
                                      const NelderMeadConfig& cfg) {
    cfg.validate();
    if (!contains(f.domain, x_start))
        throw std::invalid_argument("nelder_mead_minimize: infeasible start");
    const BoxDomain& box = f.domain;
    const int n = f.dim;
    std::uint64_t evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return evaluate(f, x);
    };

    std::vector<Vertex> simplex(n + 1);
    simplex[0] = {x_start, eval(x_start)};
    for (int k = 0; k < n; ++k) {
        std::vector<double> x = x_start;
        const double step = 0.05 * box.width(k);
        x[k] = (x[k] + step <= box.upper[k]) ? x[k] + step : x[k] - step;
        simplex[k + 1] = {std::move(x), 0.0};
        simplex[k + 1].f = eval(simplex[k + 1].x);
    }
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    std::sort(simplex.begin(), simplex.end(), by_value);

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    const int max_iters = cfg.effective_max_iters(n);
    int iter = 0;
    for (; iter < max_iters; ++iter) {
        if (simplex[n].f - simplex[0].f <= cfg.f_tol || simplex_diameter(simplex) <= cfg.x_tol)
            break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                centroid[k] += simplex[i].x[k] / n;

        const Vertex& worst = simplex[n];
        for (int k = 0; k < n; ++k)
            xr[k] = centroid[k] + cfg.reflect * (centroid[k] - worst.x[k]);
        clamp_to_box(xr, box);
        const double fr = eval(xr);

        if (fr < simplex[0].f) {
            for (int k = 0; k < n; ++k)
                xe[k] = centroid[k] + cfg.expand * (xr[k] - centroid[k]);
            clamp_to_box(xe, box);
            const double fe = eval(xe);
            if (fe < fr)
                simplex[n] = {xe, fe};
            else
                simplex[n] = {xr, fr};
        } else if (fr < simplex[n - 1].f) {
            simplex[n] = {xr, fr};
        } else {
            const bool outside = fr < worst.f;
            const std::vector<double>& toward = outside ? xr : worst.x;
            for (int k = 0; k < n; ++k)
                xc[k] = centroid[k] + cfg.contract * (toward[k] - centroid[k]);
            clamp_to_box(xc, box);
            const double fc = eval(xc);
            if (fc < (outside ? fr : worst.f)) {
                simplex[n] = {xc, fc};
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int k = 0; k < n; ++k)
                        simplex[i].x[k] =
                            simplex[0].x[k] + cfg.shrink * (simplex[i].x[k] - simplex[0].x[k]);
                    clamp_to_box(simplex[i].x, box);
                    simplex[i].f = eval(simplex[i].x);
                }
            }
        }
        std::sort(simplex.begin(), simplex.end(), by_value);
    }

    return {simplex[0].x, simplex[0].f, iter, evals};
}

RunResult hybrid_run(const ObjectiveFunction& f, const EngineConfig& cfg,
                     const AnnealSchedule& truncated_sched, const NelderMeadConfig& nm_cfg) {
    EngineConfig sa_cfg = cfg;
    sa_cfg.schedule = truncated_sched;
    RunResult res = run_synchronous(f, sa_cfg);
    const double sa_best = res.best_f;

    const auto nm_start = std::chrono::steady_clock::now();
    NelderMeadResult nm = nelder_mead_minimize(f, res.best_x, nm_cfg);
    res.wall_time_s += std::chrono::duration<double>(std::chrono::steady_clock::now() - nm_start)
                           .count();
    if (nm.f_best <= res.best_f) {
        res.best_f = nm.f_best;
        res.best_x = nm.x_best;
    }
    res.phases = PhaseBreakdown{res.evaluations, nm.evaluations, sa_best};
    res.evaluations += nm.evaluations;
    res.trace.push_back({static_cast<int>(res.trace.size()), res.evaluations, res.best_f});
    return res;
}

} // namespace parsa
