#pragma once

#include "schf/math_util.hpp"

#include <stdexcept>
#include <vector>

namespace schf {

inline void check_distance(double d) {
    if (!(d > 0.0) || !(d <= 2.0)) throw std::domain_error("minimum distance must lie in (0, 2]");
}

inline void check_leaf_angle(double eta) {
    if (!(eta >= 0.0) || !(eta <= half_pi)) throw std::domain_error("leaf angle must lie in [0, pi/2]");
}

/// Minimum angular gap between leaf parameters compatible with distance d.
inline double minimal_leaf_separation(double d) {
    check_distance(d);
    return 2.0 * guarded_asin(d / 2.0);
}

/// Number of disjoint separation intervals fitting in [0, pi/2].
inline long long leaf_count(double d) {
    check_distance(d);
    return guarded_floor(pi / (4.0 * guarded_asin(d / 2.0)));
}

/// Minimum Euclidean distance between the leaves at eta and eta2, i.e. the
/// chord between the two angle points on S^1. Accepts angles up to pi so
/// separations of shifted leaf parameters can be evaluated directly.
inline double leaf_distance(double eta, double eta2) {
    if (!(eta >= 0.0) || !(eta <= pi) || !(eta2 >= 0.0) || !(eta2 <= pi))
        throw std::domain_error("leaf angle must lie in [0, pi]");
    return 2.0 * std::sin(std::abs(eta - eta2) / 2.0);
}

enum class LeafSchemeKind { symmetric, from_zero, from_half_pi, offset };

struct LeafScheme {
    LeafSchemeKind kind = LeafSchemeKind::symmetric;
    double eta0 = 0.0; // used by the offset scheme only

    static LeafScheme symmetric() { return {LeafSchemeKind::symmetric, 0.0}; }
    static LeafScheme from_zero() { return {LeafSchemeKind::from_zero, 0.0}; }
    static LeafScheme from_half_pi() { return {LeafSchemeKind::from_half_pi, 0.0}; }
    static LeafScheme offset(double eta0) { return {LeafSchemeKind::offset, eta0}; }
};

/// Leaf parameters for the given scheme, ascending, pairwise >= the
/// separation for d. The symmetric set is built as pi/4 +- k*deta so it is
/// exactly invariant (as a set) under eta -> pi/2 - eta.
inline std::vector<double> leaf_angles(double d, const LeafScheme& scheme) {
    check_distance(d);
    const double deta = minimal_leaf_separation(d);
    const long long t = leaf_count(d);
    // representation error can spill an exactly-tight angle past a boundary
    const auto clamp = [](double eta) {
        if (eta > half_pi && eta < half_pi + floor_guard) return half_pi;
        if (eta < 0.0 && eta > -floor_guard) return 0.0;
        return eta;
    };
    std::vector<double> out;
    switch (scheme.kind) {
    case LeafSchemeKind::symmetric: {
        const long long h = t / 2;
        out.reserve(static_cast<std::size_t>(2 * h + 1));
        for (long long k = -h; k <= h; ++k)
            out.push_back(clamp(k < 0 ? pi / 4.0 - static_cast<double>(-k) * deta
                                      : pi / 4.0 + static_cast<double>(k) * deta));
        break;
    }
    case LeafSchemeKind::from_zero:
        out.reserve(static_cast<std::size_t>(t + 1));
        for (long long k = 0; k <= t; ++k) out.push_back(clamp(static_cast<double>(k) * deta));
        break;
    case LeafSchemeKind::from_half_pi:
        out.reserve(static_cast<std::size_t>(t + 1));
        for (long long k = t; k >= 0; --k) out.push_back(clamp(half_pi - static_cast<double>(k) * deta));
        break;
    case LeafSchemeKind::offset: {
        const double max0 = (half_pi - static_cast<double>(t) * deta) / 2.0;
        if (scheme.eta0 < -branch_guard || scheme.eta0 > max0 + branch_guard)
            throw std::domain_error("offset eta0 outside [0, (pi/2 - t*deta)/2]");
        out.reserve(static_cast<std::size_t>(t + 1));
        for (long long k = 0; k <= t; ++k) out.push_back(clamp(scheme.eta0 + static_cast<double>(k) * deta));
        break;
    }
    }
    return out;
}

} // namespace schf
