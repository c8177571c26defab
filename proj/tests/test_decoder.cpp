#include "schf/channel.hpp"
#include "schf/decoder.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace schf;
using Catch::Approx;

TEST_CASE("angles from point") {
    const double h = std::sqrt(0.5);
    const auto a = angles_from_point({h, 0.0, h, 0.0});
    CHECK(a.eta == Approx(pi / 4.0).epsilon(1e-15));
    CHECK(a.xi1 == 0.0);
    CHECK(a.xi2 == 0.0);

    const auto b = angles_from_point({0.0, 0.0, 1.0, 0.0});
    CHECK(b.eta == Approx(half_pi).epsilon(1e-15));
    CHECK(b.xi1 == 0.0);
    CHECK(b.xi2 == 0.0);

    const auto c = angles_from_point({0.6, 0.0, 0.0, -0.8});
    CHECK(c.eta == Approx(0.92729521800161223243).epsilon(1e-14)); // atan(4/3)
    CHECK(c.xi1 == 0.0);
    CHECK(c.xi2 == Approx(4.7123889803846898577).epsilon(1e-14)); // 3*pi/2
}

TEST_CASE("noiseless round trip") {
    for (auto [dim, d] : {std::pair{4, 1.0}, {4, 0.5}, {8, 0.7}, {16, 0.7}}) {
        const auto tables = build_tables({dim, d, Variant::standard});
        const std::uint64_t m = tables.total.convert_to<std::uint64_t>();
        for (std::uint64_t a = 0; a < m; ++a) {
            const auto cw = encode(tables, BigInt(a));
            const auto plain = decode(tables, cw.coords);
            const auto refined = decode(tables, cw.coords, {1, true});
            REQUIRE(plain.index == a);
            REQUIRE(refined.index == a);
            CHECK(plain.residual < 1e-12);
            CHECK(plain.codeword == cw.coords);
        }
    }
}

TEST_CASE("ml decoder") {
    const auto tables = build_tables({4, 1.0, Variant::standard});
    const auto book = enumerate_codebook(tables);

    for (std::size_t a = 0; a < book.size(); ++a)
        CHECK(decode_ml(book, book[a].coords) == a);

    // within the packing radius the nearest codeword is unique
    CounterRng rng(7, 0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t a = rng.below(book.size());
        std::vector<double> z(4);
        for (double& c : z) c = rng.gaussian();
        const double zn = norm(z);
        std::vector<double> y = book[a].coords;
        for (int c = 0; c < 4; ++c)
            y[static_cast<std::size_t>(c)] += 0.45 * z[static_cast<std::size_t>(c)] / zn;
        CHECK(decode_ml(book, y) == a);
    }

    // argmax of the inner product matches the exhaustive distance minimum
    for (int trial = 0; trial < 200; ++trial) {
        CounterRng r2(11, 1, static_cast<std::uint64_t>(trial));
        std::vector<double> y(4);
        for (double& c : y) c = r2.gaussian();
        std::size_t best = 0;
        double best_d = 1e300;
        for (std::size_t i = 0; i < book.size(); ++i) {
            const double dist = distance(book[i].coords, y);
            if (dist < best_d) {
                best_d = dist;
                best = i;
            }
        }
        CHECK(decode_ml(book, y) == best);
    }
}

TEST_CASE("refined decode4 matches ml under moderate noise") {
    const auto tables = build_tables({4, 1.0, Variant::standard});
    const auto book = enumerate_codebook(tables);
    int mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        CounterRng rng(3, 0, static_cast<std::uint64_t>(trial));
        const std::size_t a = rng.below(book.size());
        std::vector<double> z(4);
        for (double& c : z) c = rng.gaussian();
        const double zn = norm(z);
        std::vector<double> y = book[a].coords;
        for (int c = 0; c < 4; ++c)
            y[static_cast<std::size_t>(c)] += 0.1 * z[static_cast<std::size_t>(c)] / zn;
        const auto res = decode(tables, y, {1, true});
        const std::size_t ml = decode_ml(book, y);
        if (res.index != ml) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("degenerate block clamps to a valid leaf") {
    const auto tables = build_tables({4, 1.0, Variant::standard});
    const auto book = enumerate_codebook(tables);
    const std::vector<double> y{0.0, 0.0, 0.6, 0.8};
    const auto res = decode(tables, y, {1, true});
    // ties by symmetry: the refined result must reach the ml residual
    const std::size_t ml = decode_ml(book, y);
    std::vector<double> yhat = y;
    for (double& c : yhat) c /= norm(y);
    CHECK(res.residual == Approx(distance(book[ml].coords, yhat)).margin(1e-12));

    // dim-8 vector with one zero half-block decodes without throwing
    const auto t8 = build_tables({8, 0.7, Variant::standard});
    const std::vector<double> y8{0.0, 0.0, 0.0, 0.0, 0.6, 0.0, 0.0, 0.8};
    CHECK_NOTHROW(decode(t8, y8, {1, true}));

    CHECK_THROWS_AS(decode(tables, std::vector<double>(4, 0.0)), std::domain_error);
    CHECK_THROWS_AS(decode(tables, std::vector<double>(3, 1.0)), std::invalid_argument);
}

TEST_CASE("oracle dominance and refinement monotonicity") {
    const auto tables = build_tables({4, 0.5, Variant::standard});
    const auto book = enumerate_codebook(tables);
    for (int trial = 0; trial < 300; ++trial) {
        CounterRng rng(21, 0, static_cast<std::uint64_t>(trial));
        std::vector<double> y(4);
        for (double& c : y) c = rng.gaussian();
        if (norm(y) < 1e-9) continue;
        std::vector<double> yhat = y;
        for (double& c : yhat) c /= norm(y);

        const auto plain = decode(tables, y);
        const auto ref0 = decode(tables, y, {0, true});
        const auto ref1 = decode(tables, y, {1, true});
        const auto ref2 = decode(tables, y, {2, true});
        const double ml_res = distance(book[decode_ml(book, y)].coords, yhat);

        CHECK(ml_res <= plain.residual + 1e-12);
        CHECK(ml_res <= ref1.residual + 1e-12);
        CHECK(ref0.residual <= plain.residual + 1e-15);
        CHECK(ref1.residual <= ref0.residual + 1e-15);
        CHECK(ref2.residual <= ref1.residual + 1e-15);

        // determinism
        const auto again = decode(tables, y, {1, true});
        CHECK(again.index == ref1.index);
        CHECK(again.residual == ref1.residual);
    }
}

TEST_CASE("decode4 convenience wrapper") {
    const auto res = decode4({0.7, 0.1, -0.7, 0.05}, 1.0, {1, true});
    CHECK(res.index >= 0);
    CHECK(res.index < 16);
    CHECK(std::abs(norm(res.codeword) - 1.0) < 1e-12);
}
