#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cfo/core.hpp"
#include "cfo/engine.hpp"

namespace cfo {

/// Step-indexed series describing how one run evolved. All vectors have
/// last_step + 1 entries (steps 0 through last_step inclusive).
struct RunDiagnostics {
    std::vector<double> best_fitness_step;        // best fitness within each step
    std::vector<double> best_fitness_cumulative;  // best fitness through each step (monotone)
    std::vector<int> best_probe_series;           // 1-based probe attaining the step best
    std::vector<double> davg_series;              // normalized mean distance to the best-so-far point
    int last_step = 0;
};

/// Average distance from every probe's position at step `j` to the best
/// (probe, step) position found so far (through `j`), normalized by the
/// principal diagonal of the starting box times (n_probes - 1). The best
/// probe's own current position is included in the sum; at the best step
/// itself it contributes zero.
inline double davg_at_step(const RunMatrices& run, int j, double diag_length) {
    if (run.n_probes() < 2)
        throw std::invalid_argument("davg_at_step: needs at least two probes");
    if (!(diag_length > 0.0))
        throw std::invalid_argument("davg_at_step: diagonal length must be positive");
    const BestRecord best = best_so_far(run, j);
    double total = 0.0;
    for (int p = 0; p < run.n_probes(); ++p) {
        double sumsq = 0.0;
        for (int i = 0; i < run.n_dims(); ++i) {
            const double d = run.pos(best.probe_index, i, best.time_step) - run.pos(p, i, j);
            sumsq += d * d;
        }
        total += std::sqrt(sumsq);
    }
    return total / (diag_length * static_cast<double>(run.n_probes() - 1));
}

inline double davg_at_step(const RunMatrices& run, const DecisionSpace& space, int j) {
    return davg_at_step(run, j, space.diagonal_length());
}

/// Builds all diagnostic series for steps 0..last_step of a finished run.
/// The cumulative/best-probe scans replace on >=, matching the engine's
/// tie-breaking (latest step, then highest probe index).
inline RunDiagnostics extract_series(const RunMatrices& run, int last_step, double diag_length) {
    if (last_step < 0 || last_step > run.n_steps_allocated())
        throw std::invalid_argument("extract_series: step out of range");
    if (run.n_probes() < 2)
        throw std::invalid_argument("extract_series: needs at least two probes");

    RunDiagnostics out;
    out.last_step = last_step;
    const std::size_t n = static_cast<std::size_t>(last_step) + 1;
    out.best_fitness_step.reserve(n);
    out.best_fitness_cumulative.reserve(n);
    out.best_probe_series.reserve(n);
    out.davg_series.reserve(n);

    BestRecord best;  // running best-so-far, advanced incrementally
    best.fitness = run.fit(0, 0);
    best.probe_index = 0;
    best.time_step = 0;

    for (int j = 0; j <= last_step; ++j) {
        double step_best = run.fit(0, j);
        int step_probe = 0;
        for (int p = 0; p < run.n_probes(); ++p) {
            if (run.fit(p, j) >= step_best) {
                step_best = run.fit(p, j);
                step_probe = p;
            }
            if (run.fit(p, j) >= best.fitness) {
                best.fitness = run.fit(p, j);
                best.probe_index = p;
                best.time_step = j;
            }
        }
        out.best_fitness_step.push_back(step_best);
        out.best_probe_series.push_back(step_probe + 1);
        out.best_fitness_cumulative.push_back(best.fitness);

        double total = 0.0;
        for (int p = 0; p < run.n_probes(); ++p) {
            double sumsq = 0.0;
            for (int i = 0; i < run.n_dims(); ++i) {
                const double d = run.pos(best.probe_index, i, best.time_step) - run.pos(p, i, j);
                sumsq += d * d;
            }
            total += std::sqrt(sumsq);
        }
        out.davg_series.push_back(total / (diag_length * static_cast<double>(run.n_probes() - 1)));
    }
    return out;
}

inline RunDiagnostics extract_series(const RunMatrices& run, const DecisionSpace& space, int last_step) {
    return extract_series(run, last_step, space.diagonal_length());
}

}  // namespace cfo
