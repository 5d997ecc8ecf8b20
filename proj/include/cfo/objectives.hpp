#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfo/core.hpp"

namespace cfo {

/// The 23 classic benchmark objectives, posed as maximization problems (each
/// is the negative of its usual minimization form, except F8 and F19-F23
/// which are positive-valued maximizations already).
enum class FunctionId : int {
    F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12,
    F13, F14, F15, F16, F17, F18, F19, F20, F21, F22, F23,
};

inline std::string to_string(FunctionId id) {
    return "F" + std::to_string(static_cast<int>(id));
}

inline std::optional<FunctionId> parse_function_id(std::string_view s) {
    if (s.size() < 2 || s.size() > 3 || (s[0] != 'F' && s[0] != 'f')) return std::nullopt;
    int n = 0;
    for (char c : s.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        n = n * 10 + (c - '0');
    }
    if (n < 1 || n > 23) return std::nullopt;
    return static_cast<FunctionId>(n);
}

/// Static description of one benchmark: dimensionality, default bounds,
/// documented maximum, step budget and determinism.
struct FunctionSpec {
    FunctionId id{};
    int n_dims = 0;
    std::vector<double> min, max;
    double known_fmax = 0.0;
    int n_t = 1000;             // 100 for the noise-injecting F7
    bool deterministic = true;  // false for F7
};

/// Deterministic uniform [0,1) generator for the noisy objective. One seed,
/// one reproducible stream; exactly one deviate is consumed per F7 call.
class NoiseSource {
public:
    explicit NoiseSource(std::uint64_t seed = 1) : engine_(seed) {}

    double next() {
        // Top 53 bits mapped to [0,1); avoids distribution classes whose
        // output is not pinned down by the standard.
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

inline constexpr double pi = std::numbers::pi;
inline constexpr double e = std::numbers::e;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Shekel's foxholes lattice, 2 x 25.
inline constexpr std::array<double, 25> foxholes_a1 = {
    -32, -16, 0, 16, 32, -32, -16, 0, 16, 32, -32, -16, 0, 16, 32,
    -32, -16, 0, 16, 32, -32, -16, 0, 16, 32};
inline constexpr std::array<double, 25> foxholes_a2 = {
    -32, -32, -32, -32, -32, -16, -16, -16, -16, -16, 0, 0, 0, 0, 0,
    16, 16, 16, 16, 16, 32, 32, 32, 32, 32};

// Kowalik regression data. The sixth response value is the classic 0.0627
// (a widely reprinted corruption reads 0.0527, which contradicts the known
// minimum 3.0748e-4 at (0.1928, 0.1908, 0.1231, 0.1358)).
inline constexpr std::array<double, 11> kowalik_a = {
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
    0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
inline constexpr std::array<double, 11> kowalik_b = {
    1.0 / 0.25, 1.0 / 0.50, 1.0 / 1.00, 1.0 / 2.00, 1.0 / 4.00, 1.0 / 6.00,
    1.0 / 8.00, 1.0 / 10.0, 1.0 / 12.0, 1.0 / 14.0, 1.0 / 16.0};

// Hartman family, 3-D variant.
inline constexpr std::array<std::array<double, 3>, 4> hartman3_a = {{
    {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
inline constexpr std::array<std::array<double, 3>, 4> hartman3_p = {{
    {0.36890, 0.1170, 0.2673},
    {0.46990, 0.4387, 0.7470},
    {0.10910, 0.8732, 0.5547},
    {0.03815, 0.5743, 0.8828}}};

// Hartman family, 6-D variant.
inline constexpr std::array<std::array<double, 6>, 4> hartman6_a = {{
    {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
    {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
    {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
    {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
inline constexpr std::array<std::array<double, 6>, 4> hartman6_p = {{
    {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
    {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
    {0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650},
    {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
inline constexpr std::array<double, 4> hartman_c = {1.0, 1.2, 3.0, 3.2};

// Shekel family (F21/F22/F23 use the first 5/7/10 rows).
inline constexpr std::array<std::array<double, 4>, 10> shekel_a = {{
    {4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6}, {3, 7, 3, 7},
    {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2}, {7, 3.6, 7, 3.6}}};
inline constexpr std::array<double, 10> shekel_c = {
    0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};

// Penalty term used by F12/F13: zero on [-a, a], quartic growth outside.
inline double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

inline double f1_sphere(std::span<const double> x) {
    double z = 0.0;
    for (double xi : x) z += xi * xi;
    return -z;
}

inline double f2_abs_sum_prod(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (double xi : x) {
        sum += std::fabs(xi);
        prod *= std::fabs(xi);
    }
    return -(sum + prod);
}

inline double f3_rotated_quadric(std::span<const double> x) {
    double z = 0.0, prefix = 0.0;
    for (double xi : x) {
        prefix += xi;
        z += prefix * prefix;
    }
    return -z;
}

inline double f4_max_abs(std::span<const double> x) {
    double m = -std::numeric_limits<double>::infinity();
    for (double xi : x)
        if (std::fabs(xi) >= m) m = std::fabs(xi);
    return -m;
}

// Nonstandard Rosenbrock variant: the whole bracket, including the (x_i - 1)
// term, is squared. Kept as is; the published results use this form.
inline double f5_rosenbrock_squared(std::span<const double> x) {
    double z = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double t = 100.0 * (a * a) + (x[i] - 1.0);
        z += t * t;
    }
    return -z;
}

inline double f6_step(std::span<const double> x) {
    double z = 0.0;
    for (double xi : x) {
        const double t = std::floor(xi + 0.5);
        z += t * t;
    }
    return -z;
}

inline double f7_quartic_noise(std::span<const double> x, NoiseSource& noise) {
    double z = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x2 = x[i] * x[i];
        z += static_cast<double>(i + 1) * (x2 * x2);
    }
    return -z - noise.next();
}

inline double f8_schwefel226(std::span<const double> x) {
    double z = 0.0;
    for (double xi : x) z -= xi * std::sin(std::sqrt(std::fabs(xi)));
    return -z;
}

// Nonstandard Rastrigin variant: each per-dimension term is squared.
inline double f9_rastrigin_squared(std::span<const double> x) {
    double z = 0.0;
    for (double xi : x) {
        const double t = xi * xi - 10.0 * std::cos(two_pi * xi) + 10.0;
        z += t * t;
    }
    return -z;
}

inline double f10_ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sum1 = 0.0, sum2 = 0.0;
    for (double xi : x) {
        sum1 += xi * xi;
        sum2 += std::cos(two_pi * xi);
    }
    const double z = -20.0 * std::exp(-0.2 * std::sqrt(sum1 / n)) - std::exp(sum2 / n) + 20.0 + e;
    return -z;
}

// Griewank shifted so the maximum sits at (100, ..., 100).
inline double f11_griewank_shifted(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = x[i] - 100.0;
        sum += t * t;
        prod *= std::cos(t / std::sqrt(static_cast<double>(i + 1)));
    }
    return -(sum / 4000.0 - prod + 1.0);
}

inline double f12_penalized1(std::span<const double> x) {
    const std::size_t n = x.size();
    const double y1 = 1.0 + (x[0] + 1.0) / 4.0;
    const double yn = 1.0 + (x[n - 1] + 1.0) / 4.0;
    double sum1 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double yi = 1.0 + (x[i] + 1.0) / 4.0;
        const double yi1 = 1.0 + (x[i + 1] + 1.0) / 4.0;
        const double s = std::sin(pi * yi1);
        sum1 += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * (s * s));
    }
    const double s1 = std::sin(pi * y1);
    sum1 = sum1 + 10.0 * (s1 * s1) + (yn - 1.0) * (yn - 1.0);
    sum1 = pi * sum1 / static_cast<double>(n);
    double sum2 = 0.0;
    for (double xi : x) sum2 += penalty_u(xi, 10.0, 100.0, 4.0);
    return -(sum1 + sum2);
}

inline double f13_penalized2(std::span<const double> x) {
    const std::size_t n = x.size();
    const double x1 = x[0];
    const double xn = x[n - 1];
    double sum1 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double s = std::sin(3.0 * pi * x[i + 1]);
        sum1 += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + s * s);
    }
    const double sa = std::sin(pi * 3.0 * x1);
    const double sb = std::sin(two_pi * xn);
    sum1 = sum1 + sa * sa + (xn - 1.0) * (xn - 1.0) * (1.0 + sb * sb);
    double sum2 = 0.0;
    for (double xi : x) sum2 += penalty_u(xi, 5.0, 100.0, 4.0);
    return -(sum1 / 10.0 + sum2);
}

inline double f14_foxholes(std::span<const double> x) {
    double sum1 = 0.0;
    for (int jj = 0; jj < 25; ++jj) {
        double sum2 = std::pow(x[0] - foxholes_a1[static_cast<std::size_t>(jj)], 6.0)
                    + std::pow(x[1] - foxholes_a2[static_cast<std::size_t>(jj)], 6.0);
        sum1 += 1.0 / (static_cast<double>(jj + 1) + sum2);
    }
    return -(1.0 / (0.002 + sum1));
}

inline double f15_kowalik(std::span<const double> x) {
    double z = 0.0;
    for (std::size_t j = 0; j < 11; ++j) {
        const double b = kowalik_b[j];
        const double num = x[0] * (b * b + b * x[1]);
        const double den = b * b + b * x[2] + x[3];
        const double r = kowalik_a[j] - num / den;
        z += r * r;
    }
    return -z;
}

inline double f16_camel_back(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double x1_2 = x1 * x1, x1_4 = x1_2 * x1_2, x1_6 = x1_4 * x1_2;
    const double x2_2 = x2 * x2, x2_4 = x2_2 * x2_2;
    const double z = 4.0 * x1_2 - 2.1 * x1_4 + x1_6 / 3.0 + x1 * x2 - 4.0 * x2_2 + 4.0 * x2_4;
    return -z;
}

inline double f17_branin(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double t = x2 - 5.1 * (x1 * x1) / (4.0 * (pi * pi)) + 5.0 * x1 / pi - 6.0;
    const double z = t * t + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x1) + 10.0;
    return -z;
}

inline double f18_goldstein_price(std::span<const double> x) {
    const double x1 = x[0], x2 = x[1];
    const double a = x1 + x2 + 1.0;
    const double t1 =
        1.0 + a * a * (19.0 - 14.0 * x1 + 3.0 * (x1 * x1) - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * (x2 * x2));
    const double b = 2.0 * x1 - 3.0 * x2;
    const double t2 =
        30.0 + b * b * (18.0 - 32.0 * x1 + 12.0 * (x1 * x1) + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * (x2 * x2));
    return -(t1 * t2);
}

template <std::size_t N>
inline double hartman(std::span<const double> x,
                      const std::array<std::array<double, N>, 4>& a,
                      const std::array<std::array<double, N>, 4>& p) {
    double z = 0.0;
    for (std::size_t jj = 0; jj < 4; ++jj) {
        double sum = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double d = x[i] - p[jj][i];
            sum += a[jj][i] * (d * d);
        }
        z += hartman_c[jj] * std::exp(-sum);
    }
    return z;
}

inline double shekel(std::span<const double> x, int m) {
    double z = 0.0;
    for (int jj = 0; jj < m; ++jj) {
        double sum = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            const double d = x[i] - shekel_a[static_cast<std::size_t>(jj)][i];
            sum += d * d;
        }
        z += 1.0 / (sum + shekel_c[static_cast<std::size_t>(jj)]);
    }
    return z;
}

}  // namespace detail

/// Metadata for one benchmark id: dimensionality, default box, documented
/// maximum, step budget, determinism.
inline FunctionSpec function_spec(FunctionId id) {
    FunctionSpec s;
    s.id = id;
    auto box = [&s](int n, double lo, double hi) {
        s.n_dims = n;
        s.min.assign(static_cast<std::size_t>(n), lo);
        s.max.assign(static_cast<std::size_t>(n), hi);
    };
    switch (id) {
        case FunctionId::F1: box(30, -100.0, 100.0); s.known_fmax = 0.0; break;
        case FunctionId::F2: box(30, -10.0, 10.0); s.known_fmax = 0.0; break;
        case FunctionId::F3: box(30, -100.0, 100.0); s.known_fmax = 0.0; break;
        case FunctionId::F4: box(30, -100.0, 100.0); s.known_fmax = 0.0; break;
        case FunctionId::F5: box(30, -30.0, 30.0); s.known_fmax = 0.0; break;
        case FunctionId::F6: box(30, -100.0, 100.0); s.known_fmax = 0.0; break;
        case FunctionId::F7:
            box(30, -1.28, 1.28);
            s.known_fmax = 0.0;
            s.n_t = 100;
            s.deterministic = false;
            break;
        case FunctionId::F8: box(30, -500.0, 500.0); s.known_fmax = 12569.5; break;
        case FunctionId::F9: box(30, -5.12, 5.12); s.known_fmax = 0.0; break;
        case FunctionId::F10: box(30, -32.0, 32.0); s.known_fmax = 0.0; break;
        case FunctionId::F11: box(30, -600.0, 600.0); s.known_fmax = 0.0; break;
        case FunctionId::F12: box(30, -50.0, 50.0); s.known_fmax = 0.0; break;
        case FunctionId::F13: box(30, -50.0, 50.0); s.known_fmax = 0.0; break;
        case FunctionId::F14: box(2, -65.536, 65.536); s.known_fmax = -1.0; break;
        case FunctionId::F15: box(4, -5.0, 5.0); s.known_fmax = -3.075e-4; break;
        case FunctionId::F16: box(2, -5.0, 5.0); s.known_fmax = 1.0316285; break;
        case FunctionId::F17:
            s.n_dims = 2;
            s.min = {-5.0, 0.0};
            s.max = {10.0, 15.0};
            s.known_fmax = -0.398;
            break;
        case FunctionId::F18: box(2, -2.0, 2.0); s.known_fmax = -3.0; break;
        case FunctionId::F19: box(3, 0.0, 1.0); s.known_fmax = 3.86; break;
        case FunctionId::F20: box(6, 0.0, 1.0); s.known_fmax = 3.32; break;
        case FunctionId::F21: box(4, 0.0, 10.0); s.known_fmax = 10.0; break;
        case FunctionId::F22: box(4, 0.0, 10.0); s.known_fmax = 10.0; break;
        case FunctionId::F23: box(4, 0.0, 10.0); s.known_fmax = 10.0; break;
        default:
            throw std::invalid_argument("function_spec: unknown id");
    }
    return s;
}

/// Evaluates benchmark `id` at `x` (maximization sense: higher is better).
/// F7 consumes exactly one deviate from `noise`; all other ids are pure.
inline double evaluate(FunctionId id, std::span<const double> x, NoiseSource* noise = nullptr) {
    const FunctionSpec spec = function_spec(id);
    if (static_cast<int>(x.size()) != spec.n_dims)
        throw std::invalid_argument("evaluate: dimension mismatch for " + to_string(id));
    using namespace detail;
    switch (id) {
        case FunctionId::F1: return f1_sphere(x);
        case FunctionId::F2: return f2_abs_sum_prod(x);
        case FunctionId::F3: return f3_rotated_quadric(x);
        case FunctionId::F4: return f4_max_abs(x);
        case FunctionId::F5: return f5_rosenbrock_squared(x);
        case FunctionId::F6: return f6_step(x);
        case FunctionId::F7:
            if (noise == nullptr)
                throw std::invalid_argument("evaluate: F7 requires a noise source");
            return f7_quartic_noise(x, *noise);
        case FunctionId::F8: return f8_schwefel226(x);
        case FunctionId::F9: return f9_rastrigin_squared(x);
        case FunctionId::F10: return f10_ackley(x);
        case FunctionId::F11: return f11_griewank_shifted(x);
        case FunctionId::F12: return f12_penalized1(x);
        case FunctionId::F13: return f13_penalized2(x);
        case FunctionId::F14: return f14_foxholes(x);
        case FunctionId::F15: return f15_kowalik(x);
        case FunctionId::F16: return f16_camel_back(x);
        case FunctionId::F17: return f17_branin(x);
        case FunctionId::F18: return f18_goldstein_price(x);
        case FunctionId::F19: return hartman<3>(x, hartman3_a, hartman3_p);
        case FunctionId::F20: return hartman<6>(x, hartman6_a, hartman6_p);
        case FunctionId::F21: return shekel(x, 5);
        case FunctionId::F22: return shekel(x, 7);
        case FunctionId::F23: return shekel(x, 10);
        default:
            throw std::invalid_argument("evaluate: unknown id");
    }
}

/// All 23 ids in suite order.
inline std::vector<FunctionId> all_function_ids() {
    std::vector<FunctionId> ids;
    ids.reserve(23);
    for (int n = 1; n <= 23; ++n) ids.push_back(static_cast<FunctionId>(n));
    return ids;
}

}  // namespace cfo
