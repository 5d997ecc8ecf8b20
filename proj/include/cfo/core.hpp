#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfo {

/// Axis-aligned box of feasible coordinates with per-dimension [min, max]
/// intervals. The current bounds may be shrunk during a run; the starting
/// bounds are captured at construction and restored by reset(). The principal
/// diagonal length is always computed from the starting bounds.
class DecisionSpace {
public:
    DecisionSpace(std::vector<double> min, std::vector<double> max)
        : min_(std::move(min)), max_(std::move(max)) {
        if (min_.empty() || min_.size() != max_.size())
            throw std::invalid_argument("DecisionSpace: bounds vectors must be nonempty and equal length");
        for (std::size_t i = 0; i < min_.size(); ++i) {
            if (!(min_[i] < max_[i]))
                throw std::invalid_argument("DecisionSpace: min must be strictly below max in every dimension");
            if (!std::isfinite(min_[i]) || !std::isfinite(max_[i]))
                throw std::invalid_argument("DecisionSpace: bounds must be finite");
        }
        starting_min_ = min_;
        starting_max_ = max_;
        double sumsq = 0.0;
        for (std::size_t i = 0; i < min_.size(); ++i) {
            const double w = max_[i] - min_[i];
            sumsq += w * w;
        }
        diagonal_length_ = std::sqrt(sumsq);
    }

    /// Uniform bounds [lo, hi] in every one of n_dims dimensions.
    DecisionSpace(int n_dims, double lo, double hi)
        : DecisionSpace(std::vector<double>(checked_size(n_dims), lo),
                        std::vector<double>(checked_size(n_dims), hi)) {}

    int n_dims() const { return static_cast<int>(min_.size()); }

    double min(int i) const { return min_[static_cast<std::size_t>(i)]; }
    double max(int i) const { return max_[static_cast<std::size_t>(i)]; }
    double starting_min(int i) const { return starting_min_[static_cast<std::size_t>(i)]; }
    double starting_max(int i) const { return starting_max_[static_cast<std::size_t>(i)]; }

    /// Length of the segment from the starting lower corner to the starting
    /// upper corner; constant for the lifetime of the object.
    double diagonal_length() const { return diagonal_length_; }

    /// Replaces one dimension's current interval. Degenerate (lo == hi)
    /// intervals are tolerated because repeated shrinking can collapse a
    /// dimension to a single representable value; crossed intervals are not.
    void set_bounds(int i, double lo, double hi) {
        if (!(lo <= hi))
            throw std::invalid_argument("DecisionSpace: crossed bounds");
        min_[static_cast<std::size_t>(i)] = lo;
        max_[static_cast<std::size_t>(i)] = hi;
    }

    /// Restores the bounds captured at construction, bit for bit.
    void reset() {
        min_ = starting_min_;
        max_ = starting_max_;
    }

private:
    // Both constructor arguments funnel through this so the dimension check
    // runs regardless of argument evaluation order.
    static std::size_t checked_size(int n_dims) {
        if (n_dims < 1) throw std::invalid_argument("DecisionSpace: n_dims must be positive");
        return static_cast<std::size_t>(n_dims);
    }

    std::vector<double> min_, max_;
    std::vector<double> starting_min_, starting_max_;
    double diagonal_length_ = 0.0;
};

/// Full per-step history of one run: probe positions R, accelerations A and
/// fitness values M for steps 0..n_steps. All slots are zero-initialized at
/// construction; a slot is meaningful only once its step has been computed.
///
/// Storage is step-major, then probe, then dimension, so the coordinates of
/// one probe at one step form a contiguous row.
class RunMatrices {
public:
    RunMatrices() = default;

    RunMatrices(int n_probes, int n_dims, int n_steps)
        : n_probes_(n_probes), n_dims_(n_dims), n_steps_(n_steps) {
        if (n_probes < 1 || n_dims < 1 || n_steps < 0)
            throw std::invalid_argument("RunMatrices: invalid shape");
        const std::size_t slots = static_cast<std::size_t>(n_steps + 1);
        positions_.assign(slots * static_cast<std::size_t>(n_probes) * static_cast<std::size_t>(n_dims), 0.0);
        accelerations_.assign(positions_.size(), 0.0);
        fitness_.assign(slots * static_cast<std::size_t>(n_probes), 0.0);
    }

    int n_probes() const { return n_probes_; }
    int n_dims() const { return n_dims_; }
    int n_steps_allocated() const { return n_steps_; }

    double pos(int p, int i, int j) const { return positions_[rix(p, i, j)]; }
    double& pos(int p, int i, int j) { return positions_[rix(p, i, j)]; }
    double acc(int p, int i, int j) const { return accelerations_[rix(p, i, j)]; }
    double& acc(int p, int i, int j) { return accelerations_[rix(p, i, j)]; }
    double fit(int p, int j) const { return fitness_[mix(p, j)]; }
    double& fit(int p, int j) { return fitness_[mix(p, j)]; }

    /// Contiguous view of probe p's coordinates at step j.
    std::span<const double> position_row(int p, int j) const {
        return {positions_.data() + rix(p, 0, j), static_cast<std::size_t>(n_dims_)};
    }

private:
    std::size_t rix(int p, int i, int j) const {
        return (static_cast<std::size_t>(j) * static_cast<std::size_t>(n_probes_)
                + static_cast<std::size_t>(p)) * static_cast<std::size_t>(n_dims_)
               + static_cast<std::size_t>(i);
    }
    std::size_t mix(int p, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_probes_)
               + static_cast<std::size_t>(p);
    }

    int n_probes_ = 0, n_dims_ = 0, n_steps_ = 0;
    std::vector<double> positions_, accelerations_, fitness_;
};

/// Fixed internal constants of the parameter-free algorithm. Only the step
/// budget n_t is meant to vary (1000 normally, 100 for the noise-injecting
/// objective, small values in tests). Changing anything else requires the
/// experimental flag so deviations from the published schedule are explicit.
struct InternalParams {
    int n_t = 1000;

    double frep_init = 0.5;
    double frep_delta = 0.1;
    double frep_min = 0.05;

    double gamma_start = 0.0;
    double gamma_stop = 1.0;
    double gamma_step = 0.1;  // 11 grid points; values are computed by division, not accumulation

    int saturation_window = 25;
    double saturation_tol = 1e-6;
    int saturation_first_check = 35;

    int shrink_start = 20;
    int shrink_interval = 10;

    // Physics constants of the motion equations. They are hardwired with the
    // factor G*dt^2/2 folded to 1 and distance taken to the first power, so
    // the update loop never reads them; kept for documentation.
    double g_const = 2.0;
    double delta_t = 1.0;
    double alpha = 1.0;
    double beta = 1.0;

    bool experimental = false;

    static InternalParams defaults() { return {}; }

    static InternalParams with_step_budget(int n_t) {
        InternalParams p;
        p.n_t = n_t;
        return p;
    }
};

/// Throws unless the fixed fields hold their documented values or the
/// experimental flag is set. n_t is validated in either case.
inline void validate(const InternalParams& p) {
    if (p.n_t < 1)
        throw std::invalid_argument("InternalParams: step budget must be at least 1");
    if (p.experimental) return;
    const InternalParams d;
    const bool fixed_ok =
        p.frep_init == d.frep_init && p.frep_delta == d.frep_delta && p.frep_min == d.frep_min &&
        p.gamma_start == d.gamma_start && p.gamma_stop == d.gamma_stop && p.gamma_step == d.gamma_step &&
        p.saturation_window == d.saturation_window && p.saturation_tol == d.saturation_tol &&
        p.saturation_first_check == d.saturation_first_check &&
        p.shrink_start == d.shrink_start && p.shrink_interval == d.shrink_interval &&
        p.g_const == d.g_const && p.delta_t == d.delta_t && p.alpha == d.alpha && p.beta == d.beta;
    if (!fixed_ok)
        throw std::invalid_argument("InternalParams: non-default values require the experimental flag");
}

/// Best (probe, step) pair seen so far in a run, with the probe's position at
/// that step. Indices are 0-based in memory; output layers add 1 for display.
struct BestRecord {
    double fitness = 0.0;
    int probe_index = 0;
    int time_step = 0;
    std::vector<double> position;
};

/// One line of the outer-search log: which (probes-per-dimension, gamma) pair
/// ran, what it found, and when it stopped.
struct RunLogEntry {
    int probes_per_dim = 0;
    double gamma = 0.0;
    double run_best_fitness = 0.0;
    int run_last_step = 0;
};

/// Outcome of a full parameter-free search.
struct SearchResult {
    double best_fitness = 0.0;
    std::vector<double> best_position;
    int best_probes_per_dim = 0;
    double best_gamma = 0.0;
    std::int64_t n_eval = 0;
    int last_step_best_run = 0;
    std::vector<RunLogEntry> per_run_log;
};

}  // namespace cfo
