#pragma once

#include "schf/bigint.hpp"
#include "schf/math_util.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace schf {

/// Hypersurface area of the unit sphere S^{n-1} in R^n, via log-gamma so
/// large n cannot overflow.
inline double sphere_surface(int n) {
    if (n < 1) throw std::domain_error("dimension must be >= 1");
    return std::exp(std::log(static_cast<double>(n)) + 0.5 * n * std::log(pi) -
                    std::lgamma(1.0 + 0.5 * n));
}

/// Volume of the unit ball in R^n.
inline double ball_volume(int n) {
    if (n < 1) throw std::domain_error("dimension must be >= 1");
    return std::exp(0.5 * n * std::log(pi) - std::lgamma(1.0 + 0.5 * n));
}

/// Area of the spherical cap of angular radius theta(d)/2 = arcsin(d/2) on
/// S^{n-1}: S_{n-1} * integral of sin^{n-2} over [0, theta/2]. Adaptive
/// Gauss-Kronrod, relative error <= 1e-10.
inline double cap_area(int n, double d) {
    if (n < 2) throw std::domain_error("cap area requires dimension >= 2");
    check_distance(d);
    const double theta_half = guarded_asin(d / 2.0);
    const auto integrand = [n](double x) { return std::pow(std::sin(x), n - 2); };
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, theta_half, 15, 1e-12, &error);
    return sphere_surface(n - 1) * integral;
}

/// Fraction of S^{n-1} covered by M caps of angular radius arcsin(d/2).
/// Values above 1 signal an infeasible (M, n, d) combination.
inline double code_density(double m_points, int n, double d) {
    if (m_points <= 0.0) throw std::domain_error("point count must be positive");
    return m_points * cap_area(n, d) / sphere_surface(n);
}

inline double code_density(const BigInt& m_points, int n, double d) {
    return code_density(to_double(m_points), n, d);
}

/// Asymptotic center density of the recursive construction in dimension 2^k:
/// 2^{1 - 3*2^{k-2}} * 3^{-2^{k-3}}.
inline double asymptotic_center_density(int k) {
    if (k < 2) throw std::domain_error("k must be >= 2");
    return std::exp2(1.0 - 3.0 * std::exp2(k - 2)) * std::pow(3.0, -std::exp2(k - 3));
}

/// Center density obtained by doubling the dimension: half^2 / 2.
inline double doubled_density(double half) {
    if (half < 0.0) throw std::domain_error("density must be nonnegative");
    return half * half / 2.0;
}

/// log10 of the asymptotic cardinality bound in dimension 2^k at distance d.
inline double asymptotic_cardinality_log10(int k, double d) {
    if (k < 2) throw std::domain_error("k must be >= 2");
    check_distance(d);
    const double n = std::exp2(k);
    const double log_dc = (1.0 - 3.0 * std::exp2(k - 2)) * std::log(2.0) -
                          std::exp2(k - 3) * std::log(3.0);
    const double log_sn = std::log(n) + 0.5 * n * std::log(pi) - std::lgamma(1.0 + 0.5 * n);
    const double ln = log_dc + log_sn + (n - 1.0) * std::log(2.0 / d);
    return ln / std::log(10.0);
}

/// Asymptotic cardinality bound; evaluated logarithmically, may overflow to
/// inf for extreme inputs.
inline double asymptotic_cardinality(int k, double d) {
    return std::pow(10.0, asymptotic_cardinality_log10(k, d));
}

/// Cardinality upper bound of a commutative group code in even dimension n:
/// Dc(Lambda_{n/2}) * (4*pi / (d*sqrt(n/2)))^{n/2}.
inline double cgc_bound(int n, double d, double lattice_center_density) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("dimension must be even and >= 2");
    check_distance(d);
    if (lattice_center_density <= 0.0) throw std::domain_error("center density must be positive");
    const double half = 0.5 * n;
    return std::exp(std::log(lattice_center_density) +
                    half * std::log(4.0 * pi / (d * std::sqrt(half))));
}

/// Binary rate per dimension, (log2 M)/n.
inline double binary_rate(const BigInt& m_points, int n) {
    if (m_points < 1) throw std::domain_error("point count must be >= 1");
    if (n < 1) throw std::domain_error("dimension must be >= 1");
    return log2_bigint(m_points) / static_cast<double>(n);
}

struct DensityReport {
    BigInt m_points;
    int dim = 0;
    double dmin = 0.0;
    double density = 0.0;        // fraction of the sphere covered by the caps
    double center_density = 0.0; // M/S_n * (d/2)^{n-1}
    double rate_per_dim = 0.0;   // bits per dimension
    bool feasible = true;        // density <= 1
};

inline DensityReport make_density_report(const BigInt& m_points, int dim, double dmin) {
    DensityReport r;
    r.m_points = m_points;
    r.dim = dim;
    r.dmin = dmin;
    r.density = code_density(m_points, dim, dmin);
    r.center_density =
        to_double(m_points) / sphere_surface(dim) * std::pow(dmin / 2.0, dim - 1);
    r.rate_per_dim = binary_rate(m_points, dim);
    r.feasible = r.density <= 1.0 + 1e-12;
    return r;
}

} // namespace schf
