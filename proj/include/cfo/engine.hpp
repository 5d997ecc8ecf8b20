#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfo/core.hpp"

namespace cfo {

/// A maximization objective over a full-dimensional point.
using Objective = std::function<double(std::span<const double>)>;

/// Heaviside gate used by the acceleration kernel: only fitter probes pull.
inline double unit_step(double z) { return z >= 0.0 ? 1.0 : 0.0; }

/// Largest probes-per-dimension value explored for a given dimensionality.
/// Higher-dimensional problems get fewer probe lines to bound total cost.
inline int probes_per_dim_max(int n_dims) {
    if (n_dims >= 1 && n_dims <= 6) return 14;
    if (n_dims >= 7 && n_dims <= 10) return 12;
    if (n_dims >= 11 && n_dims <= 15) return 10;
    if (n_dims >= 16 && n_dims <= 20) return 8;
    if (n_dims >= 21 && n_dims <= 30) return 6;
    return 4;
}

/// Total probe count for a run: one axis-parallel probe line per dimension.
inline int n_probes_for(int n_dims, int probes_per_dim) {
    return n_dims * probes_per_dim;
}

/// Repositioning factor for errant probes. Walks 0.5, 0.6, ..., then wraps
/// from just above 1 back to 0.05 and climbs in 0.1 steps from there.
struct FrepState {
    double value = 0.5;
};

/// One ladder step: add the increment, wrap to the floor when the value
/// exceeds 1. The comparison is strict, so the ~0.9999999999999999 rung
/// (the accumulated sum just below 1) still counts as in range.
inline void advance_frep(FrepState& f, const InternalParams& params) {
    f.value += params.frep_delta;
    if (f.value > 1.0) f.value = params.frep_min;
}

/// Everything one inner run needs. `space` is mutated by the run (adaptive
/// shrinking) and must outlive it; callers reset it between runs.
struct RunConfig {
    int probes_per_dim = 0;
    double gamma = 0.0;
    Objective objective;
    DecisionSpace* space = nullptr;
    InternalParams params = InternalParams::defaults();
};

inline void validate(const RunConfig& cfg) {
    validate(cfg.params);
    if (cfg.space == nullptr)
        throw std::invalid_argument("RunConfig: decision space is required");
    if (!cfg.objective)
        throw std::invalid_argument("RunConfig: objective is required");
    if (cfg.probes_per_dim < 2 || cfg.probes_per_dim % 2 != 0)
        throw std::invalid_argument("RunConfig: probes per dimension must be even and at least 2");
    if (!(cfg.gamma >= 0.0 && cfg.gamma <= 1.0))
        throw std::invalid_argument("RunConfig: gamma must lie in [0, 1]");
}

/// Writes the deterministic initial probe distribution into step 0 of `run`:
/// every coordinate starts on the diagonal point selected by gamma, then each
/// dimension's probe line overwrites that dimension's coordinate with ppd
/// evenly spaced values spanning the current bounds.
inline void compute_ipd(RunMatrices& run, const DecisionSpace& space, int probes_per_dim, double gamma) {
    const int nd = space.n_dims();
    const int np = run.n_probes();
    if (nd != run.n_dims())
        throw std::invalid_argument("compute_ipd: dimension mismatch");
    if (probes_per_dim < 2 || np != n_probes_for(nd, probes_per_dim))
        throw std::invalid_argument("compute_ipd: probe count does not match probes per dimension");
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < nd; ++i)
            run.pos(p, i, 0) = space.min(i) + gamma * (space.max(i) - space.min(i));
    for (int i = 0; i < nd; ++i) {
        const double dx = (space.max(i) - space.min(i)) / static_cast<double>(probes_per_dim - 1);
        for (int k = 0; k < probes_per_dim; ++k) {
            const int p = k + probes_per_dim * i;
            run.pos(p, i, 0) = space.min(i) + static_cast<double>(k) * dx;
        }
    }
}

inline void compute_ipd(RunMatrices& run, const RunConfig& cfg) {
    compute_ipd(run, *cfg.space, cfg.probes_per_dim, cfg.gamma);
}

/// Fills the acceleration slice for step `j` from the positions and fitnesses
/// at step `j`. Every pair interaction uses mass difference gated to attract
/// only toward fitter probes, scaled by 1/distance (first power). Coalesced
/// probes (zero distance) contribute exactly zero.
///
/// The pair distance and mass term are hoisted out of the per-dimension loop;
/// they depend only on (p, k), so each per-dimension contribution is computed
/// with the identical rounding sequence as the fully nested form. Skipped
/// zero contributions are also exact: the accumulator starts at +0.0 and a
/// zero-valued addend can never flip it negative under round-to-nearest.
inline void compute_accelerations(RunMatrices& run, int j) {
    const int np = run.n_probes();
    const int nd = run.n_dims();
    for (int p = 0; p < np; ++p) {
        for (int i = 0; i < nd; ++i) run.acc(p, i, j) = 0.0;
        for (int k = 0; k < np; ++k) {
            if (k == p) continue;
            double sumsq = 0.0;
            for (int L = 0; L < nd; ++L) {
                const double d = run.pos(k, L, j) - run.pos(p, L, j);
                sumsq += d * d;
            }
            if (sumsq == 0.0) continue;
            const double dm = run.fit(k, j) - run.fit(p, j);
            const double numerator = unit_step(dm) * dm;
            if (numerator == 0.0) continue;
            const double denom = std::sqrt(sumsq);
            for (int i = 0; i < nd; ++i)
                run.acc(p, i, j) += (run.pos(k, i, j) - run.pos(p, i, j)) * numerator / denom;
        }
    }
}

/// Position update for step `j`: previous position plus previous acceleration
/// (the gravitational constant, time step and exponents are pre-folded into
/// unity, so the literal sum is the whole update).
inline void update_positions(RunMatrices& run, int j) {
    const int np = run.n_probes();
    const int nd = run.n_dims();
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < nd; ++i)
            run.pos(p, i, j) = run.pos(p, i, j - 1) + run.acc(p, i, j - 1);
}

/// Pulls probes that left the box at step `j` back inside. A coordinate below
/// the floor is placed a fraction `frep` of the way from the floor toward its
/// previous-step value; above the ceiling, symmetrically from the ceiling.
/// Two full passes run in sequence (all floors, then all ceilings), so a
/// floor correction that overshoots past the ceiling is clamped by the second
/// pass. The outer max/min guards keep the result inside even when the
/// previous-step value was itself outside the box.
inline void retrieve_errant_probes(RunMatrices& run, int j, const DecisionSpace& space, double frep) {
    const int np = run.n_probes();
    const int nd = run.n_dims();
    const int jprev = j > 0 ? j - 1 : 0;
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < nd; ++i)
            if (run.pos(p, i, j) < space.min(i))
                run.pos(p, i, j) =
                    std::max(space.min(i) + frep * (run.pos(p, i, jprev) - space.min(i)), space.min(i));
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < nd; ++i)
            if (run.pos(p, i, j) > space.max(i))
                run.pos(p, i, j) =
                    std::min(space.max(i) - frep * (space.max(i) - run.pos(p, i, jprev)), space.max(i));
}

/// Halves the box toward `r_best`: each bound moves half the distance to the
/// best-known coordinate. If rounding at extremely narrow widths ever crosses
/// the bounds, the pair collapses to the upper value; construction-time
/// invariants stay intact because set_bounds tolerates a degenerate interval.
inline void shrink_space(DecisionSpace& space, std::span<const double> r_best) {
    if (static_cast<int>(r_best.size()) != space.n_dims())
        throw std::invalid_argument("shrink_space: dimension mismatch");
    for (int i = 0; i < space.n_dims(); ++i) {
        double lo = space.min(i) + (r_best[static_cast<std::size_t>(i)] - space.min(i)) / 2.0;
        double hi = space.max(i) - (space.max(i) - r_best[static_cast<std::size_t>(i)]) / 2.0;
        if (lo > hi) lo = hi;
        space.set_bounds(i, lo, hi);
    }
}

/// Full rescan of the fitness matrix through `through_step`, steps outer and
/// probes inner, replacing on >=. Ties therefore resolve to the latest step,
/// and within a step to the highest probe index.
inline BestRecord best_so_far(const RunMatrices& run, int through_step) {
    if (through_step < 0 || through_step > run.n_steps_allocated())
        throw std::invalid_argument("best_so_far: step out of range");
    BestRecord best;
    best.fitness = run.fit(0, 0);
    best.probe_index = 0;
    best.time_step = 0;
    for (int k = 0; k <= through_step; ++k)
        for (int p = 0; p < run.n_probes(); ++p)
            if (run.fit(p, k) >= best.fitness) {
                best.fitness = run.fit(p, k);
                best.probe_index = p;
                best.time_step = k;
            }
    const auto row = run.position_row(best.probe_index, best.time_step);
    best.position.assign(row.begin(), row.end());
    return best;
}

/// Early-stop test at step `j`: never before step `saturation_first_check`;
/// otherwise take the per-step best fitness over the trailing window of 25
/// steps and report saturation when the window average sits within 1e-6 of
/// the final step's best.
inline bool fitness_saturated(const RunMatrices& run, int j, const InternalParams& params) {
    if (j < params.saturation_first_check) return false;
    const int w = params.saturation_window;
    double sum = 0.0;
    double step_best = 0.0;
    for (int k = j - (w - 1); k <= j; ++k) {
        step_best = run.fit(0, k);
        for (int p = 0; p < run.n_probes(); ++p)
            if (run.fit(p, k) >= step_best) step_best = run.fit(p, k);
        sum += step_best;
    }
    return std::fabs(sum / static_cast<double>(w) - step_best) < params.saturation_tol;
}

/// Everything a single run produces, including the full step-by-step history.
struct RunOutcome {
    BestRecord best;
    int last_step = 0;
    std::int64_t n_eval = 0;
    RunMatrices history;
};

/// One deterministic run at a fixed (probes-per-dimension, gamma) pair.
/// Per step: move probes ballistically, pull strays back, evaluate, compute
/// accelerations, update the running best, advance the repositioning factor,
/// every tenth step from 20 on shrink the box around the best-known point
/// (re-retrieving strays against the shrunken box), then test for fitness
/// saturation and stop early if flat. Note the shrink-step retrieval clamps
/// positions after their fitness was recorded; the recorded fitness stands.
inline RunOutcome run_inner(const RunConfig& cfg) {
    validate(cfg);
    DecisionSpace& space = *cfg.space;
    const InternalParams& prm = cfg.params;
    const int nd = space.n_dims();
    const int np = n_probes_for(nd, cfg.probes_per_dim);

    RunOutcome out;
    out.history = RunMatrices(np, nd, prm.n_t);
    RunMatrices& run = out.history;

    compute_ipd(run, space, cfg.probes_per_dim, cfg.gamma);
    for (int p = 0; p < np; ++p) {
        run.fit(p, 0) = cfg.objective(run.position_row(p, 0));
        ++out.n_eval;
    }
    // Accelerations at step 0 stay at their zero initialization.

    FrepState frep{prm.frep_init};
    BestRecord& best = out.best;
    best.fitness = run.fit(0, 0);
    best.probe_index = 0;
    best.time_step = 0;
    for (int p = 0; p < np; ++p)
        if (run.fit(p, 0) >= best.fitness) {
            best.fitness = run.fit(p, 0);
            best.probe_index = p;
        }

    out.last_step = prm.n_t;
    for (int j = 1; j <= prm.n_t; ++j) {
        update_positions(run, j);
        retrieve_errant_probes(run, j, space, frep.value);
        for (int p = 0; p < np; ++p) {
            run.fit(p, j) = cfg.objective(run.position_row(p, j));
            ++out.n_eval;
        }
        compute_accelerations(run, j);

        // Incremental continuation of the steps-outer/probes-inner >= scan;
        // equals a full rescan through j because the max is monotone.
        for (int p = 0; p < np; ++p)
            if (run.fit(p, j) >= best.fitness) {
                best.fitness = run.fit(p, j);
                best.probe_index = p;
                best.time_step = j;
            }

        advance_frep(frep, prm);

        if (j % prm.shrink_interval == 0 && j >= prm.shrink_start) {
            shrink_space(space, run.position_row(best.probe_index, best.time_step));
            // Strays relative to the shrunken box are pulled in with the
            // already-advanced factor, still anchored to step j-1 positions.
            retrieve_errant_probes(run, j, space, frep.value);
        }

        if (fitness_saturated(run, j, prm)) {
            out.last_step = j;
            break;
        }
    }

    const auto row = run.position_row(best.probe_index, best.time_step);
    best.position.assign(row.begin(), row.end());
    return out;
}

/// The parameter-free outer search: sweep probes-per-dimension over
/// 2, 4, ..., probes_per_dim_max(n_dims) and gamma over the 11-point grid
/// g = 0.0, 0.1, ..., 1.0 (computed by division, not accumulation), running
/// one deterministic inner run per pair. The global best replaces on >=, so
/// later runs win exact ties. Bounds are reset after each run's comparison.
/// If `best_run_history` is non-null it receives the winning run's full
/// history matrices.
inline SearchResult search(const Objective& objective, DecisionSpace& space,
                           const InternalParams& params = InternalParams::defaults(),
                           RunMatrices* best_run_history = nullptr) {
    validate(params);
    SearchResult result;
    result.best_fitness = -std::numeric_limits<double>::infinity();

    const int nd = space.n_dims();
    const int ppd_max = probes_per_dim_max(nd);
    for (int ppd = 2; ppd <= ppd_max; ppd += 2) {
        for (int g = 1; g <= 11; ++g) {
            const double gamma = static_cast<double>(g - 1) / 10.0;
            RunConfig cfg;
            cfg.probes_per_dim = ppd;
            cfg.gamma = gamma;
            cfg.objective = objective;
            cfg.space = &space;
            cfg.params = params;

            RunOutcome outcome = run_inner(cfg);
            result.n_eval += outcome.n_eval;
            result.per_run_log.push_back({ppd, gamma, outcome.best.fitness, outcome.last_step});

            if (outcome.best.fitness >= result.best_fitness) {
                result.best_fitness = outcome.best.fitness;
                result.best_position = outcome.best.position;
                result.best_probes_per_dim = ppd;
                result.best_gamma = gamma;
                result.last_step_best_run = outcome.last_step;
                if (best_run_history != nullptr) *best_run_history = std::move(outcome.history);
            }
            space.reset();
        }
    }
    return result;
}

}  // namespace cfo
