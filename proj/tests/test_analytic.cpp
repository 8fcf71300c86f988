#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gerry/analytic.hpp"
#include "gerry/engine.hpp"
#include "gerry/oracle.hpp"

using namespace gerry;

TEST_CASE("square root series") {
    auto s = sqrt_series(4);
    CHECK(s.c[0] == 1);
    CHECK(s.c[1] == -2);
    CHECK(s.c[2] == -2);
    CHECK(s.c[3] == -4);
    CHECK(s.c[4] == -10);

    CHECK(sqrt_series(0).c == std::vector<mpq_class>{1});

    SUBCASE("defining identity s^2 = 1 - 4x") {
        auto s50 = sqrt_series(50);
        auto sq = series_mul(s50, s50, 50);
        CHECK(sq.c[0] == 1);
        CHECK(sq.c[1] == -4);
        for (int i = 2; i <= 50; ++i) CHECK(sq.c[i] == 0);
    }
}

TEST_CASE("series inverse") {
    auto s = sqrt_series(30);
    auto prod = series_mul(s, series_inverse(s, 30), 30);
    CHECK(prod.c[0] == 1);
    for (int i = 1; i <= 30; ++i) CHECK(prod.c[i] == 0);

    RationalSeries zero;
    zero.c = {0, 1};
    CHECK_THROWS_AS(series_inverse(zero, 5), std::invalid_argument);
}

TEST_CASE("3-row counting series") {
    auto a = knuth_series(20);
    CHECK(a[0] == 1);

    SUBCASE("a_1 matches the exhaustive count on the 3x2 board") {
        auto hist = oracle_histogram(3, 2, 2).histogram;
        CHECK(a[1] * 2 == (long)hist.at({3}));
    }
    SUBCASE("a_1..a_20 match the transfer engine") {
        auto engine_terms = fixed_m_sequence(3, 20, {});
        for (int n = 1; n <= 20; ++n) CHECK(engine_terms[n - 1] == a[n]);
    }
    SUBCASE("integrality up to order 200") {
        CHECK_NOTHROW(knuth_series(200));
    }
}
