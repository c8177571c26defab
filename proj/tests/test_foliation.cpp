#include "schf/foliation.hpp"
#include "schf/math_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace schf;
using Catch::Approx;

TEST_CASE("minimal leaf separation") {
    CHECK(minimal_leaf_separation(1.0) == Approx(pi / 3.0).epsilon(1e-15));
    CHECK(minimal_leaf_separation(2.0) == Approx(pi).epsilon(1e-15));
    // extended-precision oracle: 2*asin(1/4)
    CHECK(minimal_leaf_separation(0.5) == Approx(0.50536051028415730697).epsilon(1e-15));
    CHECK_THROWS_AS(minimal_leaf_separation(0.0), std::domain_error);
    CHECK_THROWS_AS(minimal_leaf_separation(-1.0), std::domain_error);
    CHECK_THROWS_AS(minimal_leaf_separation(2.5), std::domain_error);
}

TEST_CASE("minimal leaf separation is strictly increasing") {
    double prev = 0.0;
    for (double d = 0.05; d <= 2.0; d += 0.05) {
        const double cur = minimal_leaf_separation(d);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("leaf count") {
    CHECK(leaf_count(1.0) == 1);
    CHECK(leaf_count(2.0) == 0);
    CHECK(leaf_count(0.5) == 3);
}

TEST_CASE("leaf count non-increasing in d") {
    long long prev = leaf_count(2.0);
    for (double d = 2.0; d >= 0.05; d -= 0.05) {
        const long long cur = leaf_count(d);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("leaf distance") {
    CHECK(leaf_distance(0.3, 0.3) == 0.0);
    CHECK(leaf_distance(0.0, half_pi) == Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(leaf_distance(pi / 4.0, pi / 4.0 + pi / 3.0) == Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(leaf_distance(-0.1, 0.2), std::domain_error);
    CHECK_THROWS_AS(leaf_distance(0.1, 3.5), std::domain_error);
}

TEST_CASE("leaf distance equals the sampled minimum between two tori") {
    const double eta = pi / 4.0, eta2 = pi / 4.0 + pi / 3.0;
    double best = 10.0;
    const int n = 60;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double a = two_pi * i / n, b = two_pi * j / n;
            const double p[4] = {std::cos(eta) * std::cos(a), std::cos(eta) * std::sin(a),
                                 std::sin(eta) * std::cos(b), std::sin(eta) * std::sin(b)};
            const double q[4] = {std::cos(eta2) * std::cos(a), std::cos(eta2) * std::sin(a),
                                 std::sin(eta2) * std::cos(b), std::sin(eta2) * std::sin(b)};
            double s = 0.0;
            for (int c = 0; c < 4; ++c) s += (p[c] - q[c]) * (p[c] - q[c]);
            best = std::min(best, std::sqrt(s));
        }
    // equal angles minimize the pairwise distance, so the sampled minimum is
    // attained exactly at the formula value
    CHECK(best == Approx(leaf_distance(eta, eta2)).epsilon(1e-12));
}

TEST_CASE("leaf angles per scheme") {
    const auto sym1 = leaf_angles(1.0, LeafScheme::symmetric());
    REQUIRE(sym1.size() == 1);
    CHECK(sym1[0] == Approx(pi / 4.0).epsilon(1e-15));

    const auto zero1 = leaf_angles(1.0, LeafScheme::from_zero());
    REQUIRE(zero1.size() == 2);
    CHECK(zero1[0] == 0.0);
    CHECK(zero1[1] == Approx(pi / 3.0).epsilon(1e-15));

    const auto sym05 = leaf_angles(0.5, LeafScheme::symmetric());
    REQUIRE(sym05.size() == 3);
    CHECK(sym05[0] == Approx(0.28003765311329100264).epsilon(1e-14));
    CHECK(sym05[1] == Approx(pi / 4.0).epsilon(1e-15));
    CHECK(sym05[2] == Approx(1.2907586736816056166).epsilon(1e-14));

    const auto half05 = leaf_angles(0.5, LeafScheme::from_half_pi());
    REQUIRE(half05.size() == 4);
    CHECK(half05.back() == half_pi);
}

TEST_CASE("leaf angles are ascending and keep the code distance") {
    for (double d : {0.3, 0.5, 0.9, 1.3, 1.9})
        for (const auto& scheme : {LeafScheme::symmetric(), LeafScheme::from_zero(),
                                   LeafScheme::from_half_pi()}) {
            const auto angles = leaf_angles(d, scheme);
            for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
                CHECK(angles[i] < angles[i + 1]);
                for (std::size_t j = i + 1; j < angles.size(); ++j)
                    CHECK(leaf_distance(angles[i], angles[j]) >= d - 1e-12);
            }
        }
}

TEST_CASE("symmetric scheme invariant under eta -> pi/2 - eta") {
    for (double d : {0.2, 0.5, 0.8, 1.1}) {
        const auto angles = leaf_angles(d, LeafScheme::symmetric());
        for (double eta : angles) {
            const double mirrored = half_pi - eta;
            double best = 10.0;
            for (double other : angles) best = std::min(best, std::abs(other - mirrored));
            CHECK(best < 1e-12);
        }
    }
}

TEST_CASE("offset scheme bounds") {
    CHECK_THROWS_AS(leaf_angles(0.5, LeafScheme::offset(-0.1)), std::domain_error);
    CHECK_THROWS_AS(leaf_angles(0.5, LeafScheme::offset(0.5)), std::domain_error);
    const double t = static_cast<double>(leaf_count(0.5));
    const double max0 = (half_pi - t * minimal_leaf_separation(0.5)) / 2.0;
    const auto angles = leaf_angles(0.5, LeafScheme::offset(max0));
    CHECK(angles.size() == 4);
    CHECK(angles.front() == Approx(max0));
}
