#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace schf {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;

// Tolerance for floor computations: values within this distance below an
// integer are promoted to it, so exactly-tight spacings do not lose a point
// to representation error.
inline constexpr double floor_guard = 1e-9;

// Relative tolerance for branch tests and arcsin arguments at exactly-tight
// distances (d == 2 cos eta etc.), where IEEE rounding can land 1 ulp past 1.
inline constexpr double branch_guard = 1e-12;

/// Floor with the near-integer guard.
inline long long guarded_floor(double x) {
    const double n = std::nearbyint(x);
    if (n > x && n - x < floor_guard) return static_cast<long long>(n);
    return static_cast<long long>(std::floor(x));
}

/// arcsin that accepts arguments marginally above 1 (within branch_guard).
inline double guarded_asin(double x) {
    if (x > 1.0) {
        if (x > 1.0 + branch_guard) throw std::domain_error("asin argument out of range");
        return half_pi;
    }
    if (x < -1.0) {
        if (x < -(1.0 + branch_guard)) throw std::domain_error("asin argument out of range");
        return -half_pi;
    }
    return std::asin(x);
}

/// Branch test "a <= b" tolerant to 1-ulp spill at equality.
inline bool leq_guarded(double a, double b) {
    return a <= b * (1.0 + branch_guard);
}

/// Round half away from zero is unsuitable at the half-step ties the decoder
/// hits; round half up matches the lowest-index tie-break of ML decoding.
inline long long round_half_up(double x) {
    return static_cast<long long>(std::floor(x + 0.5));
}

/// Nonnegative remainder of a mod m for m > 0.
inline long long floor_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

/// Angle wrapped into [0, 2*pi).
inline double wrap_angle(double a) {
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a -= two_pi;
    return a;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

inline double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double t = a[i] - b[i];
        s += t * t;
    }
    return std::sqrt(s);
}

/// Brute-force minimum pairwise distance, the O(M^2) test oracle.
inline double min_pairwise_distance(const std::vector<std::vector<double>>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, distance(pts[i], pts[j]));
    return best;
}

} // namespace schf
