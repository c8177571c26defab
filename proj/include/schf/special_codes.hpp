#pragma once

#include "schf/math_util.hpp"

#include <algorithm>
#include <vector>

namespace schf {

/// The biorthogonal code: +-e_i, 2n points at distance sqrt(2).
inline std::vector<std::vector<double>> biorthogonal_code(int dim) {
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(2 * dim));
    for (int i = 0; i < dim; ++i)
        for (double s : {1.0, -1.0}) {
            std::vector<double> p(static_cast<std::size_t>(dim), 0.0);
            p[static_cast<std::size_t>(i)] = s;
            pts.push_back(std::move(p));
        }
    return pts;
}

namespace detail {

/// Regular simplex of m points (m <= 5) on the unit sphere of R^4, built in
/// the Helmert basis of the hyperplane orthogonal to (1,...,1) in R^m.
inline std::vector<std::vector<double>> simplex_code4(int m) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < m; ++i) {
        std::vector<double> p(4, 0.0);
        for (int k = 1; k < m; ++k) {
            const double denom = std::sqrt(static_cast<double>(k) * (k + 1));
            double comp = 0.0;
            if (i < k) comp = 1.0 / denom;
            else if (i == k) comp = -static_cast<double>(k) / denom;
            p[static_cast<std::size_t>(k - 1)] = comp;
        }
        const double nrm = norm(p);
        for (double& x : p) x /= nrm;
        pts.push_back(std::move(p));
    }
    return pts;
}

/// Rectified 4-simplex: the 10 normalized edge midpoints, max inner product
/// 1/6, minimum distance sqrt(5/3).
inline std::vector<std::vector<double>> rectified_simplex_code4() {
    const auto v = simplex_code4(5);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            std::vector<double> p(4);
            for (int c = 0; c < 4; ++c)
                p[static_cast<std::size_t>(c)] =
                    v[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +
                    v[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            const double nrm = norm(p);
            for (double& x : p) x /= nrm;
            pts.push_back(std::move(p));
        }
    return pts;
}

/// The 24-cell: all permutations of (+-sqrt(1/2), +-sqrt(1/2), 0, 0).
inline std::vector<std::vector<double>> cell24_code() {
    const double h = std::sqrt(0.5);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (double si : {1.0, -1.0})
                for (double sj : {1.0, -1.0}) {
                    std::vector<double> p(4, 0.0);
                    p[static_cast<std::size_t>(i)] = si * h;
                    p[static_cast<std::size_t>(j)] = sj * h;
                    pts.push_back(std::move(p));
                }
    return pts;
}

} // namespace detail

/// One entry of the optimal dim-4 catalog.
struct SpecialCode4 {
    long long count;
    double min_distance;
    std::vector<std::vector<double>> (*generate)();
};

/// Best known codes in R^4 for small cardinalities. The simplexes cover
/// 2..5 (distance sqrt(2m/(m-1))), then the cross-polytope, the rectified
/// simplex and the 24-cell.
inline const std::vector<SpecialCode4>& special_codes4() {
    static const std::vector<SpecialCode4> catalog = {
        {2, 2.0, +[] { return detail::simplex_code4(2); }},
        {3, std::sqrt(3.0), +[] { return detail::simplex_code4(3); }},
        {4, std::sqrt(8.0 / 3.0), +[] { return detail::simplex_code4(4); }},
        {5, std::sqrt(5.0 / 2.0), +[] { return detail::simplex_code4(5); }},
        {8, std::sqrt(2.0), +[] { return biorthogonal_code(4); }},
        {10, std::sqrt(5.0 / 3.0), +[] { return detail::rectified_simplex_code4(); }},
        {24, 1.0, +[] { return detail::cell24_code(); }},
    };
    return catalog;
}

/// Largest dim-4 catalog code usable at distance d (0 when none).
inline long long best_special4_count(double d) {
    long long best = 0;
    for (const auto& c : special_codes4())
        if (leq_guarded(d, c.min_distance)) best = std::max(best, c.count);
    return best;
}

} // namespace schf
