#pragma once

#include <string_view>
#include <vector>

namespace schf {

/// Published cardinalities of alternative spherical-code constructions,
/// embedded for comparison output only (never validated here).
struct ReferencePoint {
    std::string_view series;
    int dim;
    double dmin;
    double m_points;
};

inline const std::vector<ReferencePoint>& reference_series() {
    static const std::vector<ReferencePoint> data = {
        // dimension 4
        {"tlsc", 4, 0.5, 172}, {"tlsc", 4, 0.4, 308}, {"tlsc", 4, 0.3, 798},
        {"tlsc", 4, 0.2, 2718}, {"tlsc", 4, 0.1, 22406}, {"tlsc", 4, 0.01, 2.27e7},
        {"tlsc", 4, 0.001, 2.27e10},
        {"apple-peeling", 4, 0.5, 170}, {"apple-peeling", 4, 0.4, 342},
        {"apple-peeling", 4, 0.3, 826}, {"apple-peeling", 4, 0.2, 2822},
        {"apple-peeling", 4, 0.1, 22740}, {"apple-peeling", 4, 0.01, 1.97e7},
        {"apple-peeling", 4, 0.001, 2.27e10},
        {"wrapped", 4, 0.1, 17198}, {"wrapped", 4, 0.01, 2.31e7},
        {"wrapped", 4, 0.001, 2.59e10},
        {"laminated", 4, 0.1, 16976}, {"laminated", 4, 0.01, 2.31e7},
        {"laminated", 4, 0.001, 2.59e10},
        // higher dimensions (tlsc with k-element subcodes / polygon layers)
        {"tlsc-k-elements", 8, 0.5, 2748}, {"tlsc-k-elements", 8, 0.3, 45252},
        {"tlsc-k-elements", 8, 0.1, 6.47e6}, {"tlsc-k-elements", 8, 0.01, 7.66e10},
        {"tlsc-polygon-layers", 8, 0.5, 2312}, {"tlsc-polygon-layers", 8, 0.3, 89945},
        {"tlsc-polygon-layers", 8, 0.1, 4.09e8}, {"tlsc-polygon-layers", 8, 0.01, 5.19e15},
        {"tlsc-k-elements", 16, 0.5, 69984}, {"tlsc-k-elements", 16, 0.3, 1.17e8},
        {"tlsc-k-elements", 16, 0.1, 2.41e12}, {"tlsc-k-elements", 16, 0.01, 3.66e20},
        {"tlsc-polygon-layers", 16, 0.5, 195312}, {"tlsc-polygon-layers", 16, 0.3, 7.17e7},
        {"tlsc-polygon-layers", 16, 0.1, 2.39e15},
        {"tlsc-k-elements", 32, 0.5, 32}, {"tlsc-k-elements", 32, 0.3, 2.68e12},
        {"tlsc-k-elements", 32, 0.1, 6.81e21}, {"tlsc-k-elements", 32, 0.01, 2.48e38},
        {"tlsc-polygon-layers", 32, 0.5, 32768}, {"tlsc-polygon-layers", 32, 0.3, 1.41e12},
        {"tlsc-polygon-layers", 32, 0.1, 7.02e24},
        {"tlsc-k-elements", 64, 0.5, 64}, {"tlsc-k-elements", 64, 0.3, 2.40e11},
        {"tlsc-k-elements", 64, 0.1, 1.08e38},
        {"tlsc-polygon-layers", 64, 0.5, 2.14e9}, {"tlsc-polygon-layers", 64, 0.3, 9.22e18},
        {"tlsc-polygon-layers", 64, 0.1, 2.90e37},
    };
    return data;
}

} // namespace schf
