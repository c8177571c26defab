#include "schf/code.hpp"
#include "schf/density.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace schf;
using Catch::Approx;

TEST_CASE("sphere surface and ball volume") {
    CHECK(sphere_surface(2) == Approx(two_pi).epsilon(1e-13));
    CHECK(sphere_surface(3) == Approx(4.0 * pi).epsilon(1e-13));
    CHECK(sphere_surface(4) == Approx(2.0 * pi * pi).epsilon(1e-13));
    CHECK(ball_volume(1) == Approx(2.0).epsilon(1e-13));
    CHECK(ball_volume(2) == Approx(pi).epsilon(1e-13));
    CHECK(ball_volume(3) == Approx(4.0 * pi / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(sphere_surface(0), std::domain_error);
}

TEST_CASE("cap area") {
    // closed form on S^2
    for (double d = 0.1; d <= 2.0; d += 0.1) {
        const double closed = two_pi * (1.0 - std::cos(std::asin(d / 2.0)));
        CHECK(std::abs(cap_area(3, d) - closed) < 1e-9);
    }
    // half sphere at d = 2
    for (int n = 2; n <= 16; ++n)
        CHECK(std::abs(cap_area(n, 2.0) - sphere_surface(n) / 2.0) < 1e-9);
    // small-d limit: cap ~ V_{n-1} (d/2)^{n-1}
    const double d = 1e-3;
    CHECK(cap_area(4, d) / (ball_volume(3) * std::pow(d / 2.0, 3)) == Approx(1.0).margin(1e-3));
}

TEST_CASE("code density") {
    CHECK(code_density(2.0, 4, 2.0) == Approx(1.0).margin(1e-9));
    CHECK(code_density(2.0, 7, 2.0) == Approx(1.0).margin(1e-9));
    CHECK(code_density(1.0, 4, 0.5) ==
          Approx(cap_area(4, 0.5) / sphere_surface(4)).epsilon(1e-12));
    const double d152 = code_density(BigInt(152), 4, 0.5);
    CHECK(d152 > 0.0);
    CHECK(d152 < 1.0);
    const auto report = make_density_report(BigInt(152), 4, 0.5);
    CHECK(report.feasible);
    // packing violation signal
    CHECK_FALSE(make_density_report(BigInt(1) << 40, 4, 1.0).feasible);
}

TEST_CASE("asymptotic center densities") {
    CHECK(asymptotic_center_density(2) ==
          Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-15));
    CHECK(asymptotic_center_density(3) == Approx(1.0 / 96.0).epsilon(1e-15));
    CHECK(asymptotic_center_density(4) == Approx(1.0 / 18432.0).epsilon(1e-15));
    CHECK(asymptotic_center_density(5) == Approx(1.0 / 679477248.0).epsilon(1e-15));
    CHECK_THROWS_AS(asymptotic_center_density(1), std::domain_error);
}

TEST_CASE("doubled density") {
    CHECK(doubled_density(1.0 / (4.0 * std::sqrt(3.0))) == Approx(1.0 / 96.0).epsilon(1e-14));
    CHECK(doubled_density(0.0) == 0.0);
    CHECK(doubled_density(1.0 / (4.0 * std::sqrt(2.0))) == Approx(1.0 / 64.0).epsilon(1e-14));
    for (int k = 2; k <= 5; ++k)
        CHECK(asymptotic_center_density(k + 1) ==
              Approx(doubled_density(asymptotic_center_density(k))).epsilon(1e-15));
}

TEST_CASE("asymptotic cardinality bound") {
    // the log form matches the direct product where the latter is finite
    const double direct =
        asymptotic_center_density(2) * sphere_surface(4) * std::pow(2.0 / 1e-3, 3);
    CHECK(asymptotic_cardinality(2, 1e-3) == Approx(direct).epsilon(1e-12));
    CHECK(asymptotic_cardinality(2, 1e-3) == Approx(2.279287503e10).epsilon(1e-8));
    CHECK(asymptotic_cardinality(3, 0.01) == Approx(4.329292935e15).epsilon(1e-8));
    CHECK(4.28e15 <= asymptotic_cardinality(3, 0.01));
    // halving d scales by 2^(2^k - 1)
    CHECK(asymptotic_cardinality(3, 0.005) / asymptotic_cardinality(3, 0.01) ==
          Approx(std::exp2(7)).epsilon(1e-10));
}

TEST_CASE("cgc bound") {
    const double dc_a2 = 1.0 / (2.0 * std::sqrt(3.0));
    const double direct = dc_a2 * std::pow(4.0 * pi / (0.1 * std::sqrt(2.0)), 2.0);
    CHECK(cgc_bound(4, 0.1, dc_a2) == Approx(direct).epsilon(1e-12));
    CHECK(cgc_bound(4, 0.05, dc_a2) / cgc_bound(4, 0.1, dc_a2) == Approx(4.0).epsilon(1e-10));
    // below some d the construction overtakes the group-code bound
    CHECK(to_double(cardinality_standard(4, 1e-3)) > cgc_bound(4, 1e-3, dc_a2));
    CHECK_THROWS_AS(cgc_bound(5, 0.1, dc_a2), std::domain_error);
}

TEST_CASE("binary rate") {
    CHECK(binary_rate(BigInt(16), 4) == Approx(1.0).epsilon(1e-15));
    CHECK(binary_rate(BigInt(2608), 8) == Approx(1.4185910192788846941).epsilon(1e-14));
    CHECK(binary_rate(BigInt(1), 4) == 0.0);
    CHECK(log2_bigint(BigInt(1) << 100) == Approx(100.0).epsilon(1e-15));
    BigInt huge = BigInt("39600000000000000000000000000000000000000000000000000000000");
    CHECK(binary_rate(huge, 32) == Approx(log2_bigint(huge) / 32.0).epsilon(1e-15));
}

TEST_CASE("foliation measure identity") {
    // S_{2n} = (S_n)^2 / 2^n * integral_0^pi sin^{n-1}
    for (int n : {2, 4, 8}) {
        double err = 0.0;
        const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [n](double x) { return std::pow(std::sin(x), n - 1); }, 0.0, pi, 15, 1e-12, &err);
        const double rhs = sphere_surface(n) * sphere_surface(n) / std::exp2(n) * integral;
        CHECK(std::abs(sphere_surface(2 * n) - rhs) < 1e-9);
    }
}

TEST_CASE("density convergence of the dim-4 construction") {
    const double target = 1.0 / (4.0 * std::sqrt(3.0));
    for (double d : {0.1, 0.01, 0.001}) {
        const double cd = to_double(cardinality_standard(4, d)) / sphere_surface(4) *
                          std::pow(d / 2.0, 3);
        CHECK(cd <= 1.02 * target);
        if (d <= 0.001) CHECK(cd == Approx(target).epsilon(0.02));
    }
    for (int k : {2, 3})
        for (double d : {0.1, 0.01}) {
            const double m = to_double(cardinality_standard(1 << k, d));
            CHECK(m <= 1.02 * asymptotic_cardinality(k, d));
        }
}
