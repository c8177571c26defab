#pragma once

#include "schf/foliation.hpp"
#include "schf/math_util.hpp"

#include <array>
#include <vector>

namespace schf {

/// Maximum number m of points per internal circle of the torus at eta.
inline long long points_per_circle(double d, double eta) {
    check_distance(d);
    check_leaf_angle(eta);
    const double c = std::cos(eta);
    if (!leq_guarded(d, 2.0 * c)) return 1;
    return guarded_floor(pi / guarded_asin(d / (2.0 * c)));
}

/// Capacity of a unit-radius great circle (the Hopf fiber through a torus point).
inline long long diagonal_circle_count(double d) {
    check_distance(d);
    return guarded_floor(pi / guarded_asin(d / 2.0));
}

/// Maximum even count of internal circles with half-step displacement pi/m.
/// The displaced-adjacent constraint gives n1; the aligned two-apart
/// constraint gives n2; the count is forced even so the wrap-around pair
/// keeps alternating displacements.
inline long long circles_per_torus(double d, double eta) {
    check_distance(d);
    check_leaf_angle(eta);
    const long long m = points_per_circle(d, eta);
    const double s = std::sin(eta);
    const double c = std::cos(eta);

    long long n1 = 1;
    if (s > 0.0) {
        const double sd = std::sin(pi / (2.0 * static_cast<double>(m)));
        const double radicand = (d * d / 4.0) / (s * s) - (c * c) / (s * s) * sd * sd;
        if (radicand > 0.0) {
            const double r = std::sqrt(radicand);
            n1 = (r > 1.0 + branch_guard) ? 1 : guarded_floor(pi / guarded_asin(std::min(r, 1.0)));
        } else {
            n1 = 1;
        }
    }

    long long n2 = 1;
    if (s > 0.0 && leq_guarded(d, 2.0 * s))
        n2 = guarded_floor(two_pi / guarded_asin(d / (2.0 * s)));

    const long long ntilde = 2 * (std::min(n1, n2) / 2);
    return std::max(ntilde, 1ll);
}

/// Point layout on one torus: m points per circle, n_circles circles,
/// alternate circles displaced by half a step.
struct TorusLayout {
    double eta = 0.0;
    long long m = 1;
    long long n_circles = 1;

    double dxi1() const { return two_pi / static_cast<double>(m); }
    double dxi2() const { return two_pi / static_cast<double>(n_circles); }
    long long size() const { return m * n_circles; }
};

/// Layout for the torus at eta. Degenerate leaves (eta in {0, pi/2})
/// collapse to a single unit circle carrying the fiber-circle capacity; the
/// dead coordinate pair sits at the origin. At eta = pi/2 the live circle is
/// the second block, so the count moves to n_circles.
inline TorusLayout make_layout(double d, double eta) {
    check_distance(d);
    check_leaf_angle(eta);
    if (eta == 0.0) return {eta, diagonal_circle_count(d), 1};
    if (eta == half_pi) return {eta, 1, diagonal_circle_count(d)};
    return {eta, points_per_circle(d, eta), circles_per_torus(d, eta)};
}

struct TorusPoint {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double eta = 0.0;

    std::array<double, 4> embed() const {
        const double c = std::cos(eta), s = std::sin(eta);
        return {c * std::cos(xi1), c * std::sin(xi1), s * std::cos(xi2), s * std::sin(xi2)};
    }
};

/// Angles of the a-th point, k-major: j = a mod m, k = a div m.
inline TorusPoint torus_point_angles(const TorusLayout& lay, long long a) {
    const long long j = a % lay.m;
    const long long k = a / lay.m;
    const double xi1 = static_cast<double>(j) * (two_pi / static_cast<double>(lay.m)) +
                       static_cast<double>(k) * (pi / static_cast<double>(lay.m));
    const double xi2 = static_cast<double>(k) * (two_pi / static_cast<double>(lay.n_circles));
    return {xi1, xi2, lay.eta};
}

inline std::array<double, 4> torus_point(const TorusLayout& lay, long long a) {
    return torus_point_angles(lay, a).embed();
}

inline std::vector<std::array<double, 4>> torus_points(const TorusLayout& lay) {
    std::vector<std::array<double, 4>> out;
    out.reserve(static_cast<std::size_t>(lay.size()));
    for (long long a = 0; a < lay.size(); ++a) out.push_back(torus_point(lay, a));
    return out;
}

} // namespace schf
