#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "perfect/expectation.hpp"

using namespace perfect;

TEST_SUITE("expectation") {

TEST_CASE("configuration counts") {
    CHECK(count_hole_configs(5, 5) == 12);
    CHECK(count_hole_configs(7, 5) == 252);
    CHECK(count_hole_configs(7, 7) == 360);
    CHECK(count_all_hole_configs(7) == 612);
    CHECK(count_all_antihole_configs(7) == 360);
    CHECK(count_all_antihole_configs(6) == 0);
    CHECK(count_all_hole_configs(4) == 0);
    CHECK_THROWS_AS(count_hole_configs(5, 4), std::domain_error);
    CHECK_THROWS_AS(count_hole_configs(5, 7), std::domain_error);
    CHECK_THROWS_AS(count_hole_configs(9, 3), std::domain_error);
}

TEST_CASE("configuration counts agree with enumeration") {
    for (int n = 5; n <= 8; ++n)
        for (int i = 5; i <= n; i += 2)
            CHECK(count_hole_configs(n, i) == oracle::count_configurations(n, i));
}

TEST_CASE("large orders stay exact") {
    // 60!/(2*59*0!) style products overflow 64 bits long before this.
    BigInt c = count_hole_configs(60, 59);
    BigInt fact = 1;
    for (int t = 2; t <= 60; ++t) fact *= t;
    CHECK(c == fact / (2 * 59));
}

TEST_CASE("closed forms") {
    auto e = expected_counts(5, 0.5);
    CHECK(e.e_holes == 0.01171875);
    CHECK(e.e_antiholes == 0.0);
    CHECK(e.e_total == 0.01171875);
    auto e7 = expected_counts(7, 0.5);
    CHECK(e7.e_antiholes == doctest::Approx(360.0 * std::pow(0.5, 21)));
    CHECK(e7.e_holes == doctest::Approx(252.0 * std::pow(0.5, 10) + 360.0 * std::pow(0.5, 21)));
    CHECK(expected_counts(4, 0.5).e_total == 0.0);
    CHECK(expected_counts(10, 0.0).e_total == 0.0);
    CHECK(expected_counts(10, 1.0).e_total == 0.0);
    CHECK_THROWS_AS(expected_counts(5, 1.5), std::domain_error);
    CHECK_THROWS_AS(expected_counts(5, -0.1), std::domain_error);
}

TEST_CASE("total is symmetric under p <-> 1-p") {
    for (int n : {5, 7, 10, 20, 50})
        for (int k = 0; k <= 100; ++k) {
            const double p = k / 100.0;
            const double q = 1.0 - p;
            CHECK(expected_counts(n, p).e_total == expected_counts(n, q).e_total);
        }
}

TEST_CASE("order 5 peaks at one half") {
    HoleExpectation t(5);
    int best = 0;
    double best_value = -1;
    for (int k = 0; k <= 1000; ++k) {
        double v = t.evaluate(k / 1000.0).e_holes;
        if (v > best_value) {
            best_value = v;
            best = k;
        }
    }
    CHECK(best == 500);
}

TEST_CASE("huge orders do not overflow to nan") {
    auto e = expected_counts(300, 0.5);
    CHECK(std::isfinite(e.e_total));
    CHECK(e.e_total > 0);
    auto tiny = expected_counts(300, 1e-9);
    CHECK(std::isfinite(tiny.e_total));
}

TEST_CASE("Monte Carlo agrees with the closed form on a small case") {
    auto mc = monte_carlo_counts(7, 0.4, 4000, 17);
    auto e = expected_counts(7, 0.4);
    CHECK(std::abs(mc.mean_holes - e.e_holes) <= 4 * mc.se_holes + 1e-12);
    CHECK(std::abs(mc.mean_total - e.e_total) <= 4 * mc.se_total + 1e-12);
}

TEST_CASE("Monte Carlo does not depend on the thread layout") {
    auto a = monte_carlo_counts(8, 0.5, 300, 5);
    auto b = reference::monte_carlo_counts_serial(8, 0.5, 300, 5);
    CHECK(a.mean_holes == b.mean_holes);
    CHECK(a.mean_antiholes == b.mean_antiholes);
    CHECK(a.se_total == b.se_total);
    CHECK_THROWS(monte_carlo_counts(8, 0.5, 0, 5));
}

TEST_CASE("termination thresholds") {
    auto t = termination_threshold(20, 0.5, 0.1);
    auto e = expected_counts(20, 0.5);
    CHECK(t.holes == static_cast<std::size_t>(std::ceil(0.1 * e.e_holes)));
    CHECK(t.antiholes == static_cast<std::size_t>(std::ceil(0.1 * e.e_antiholes)));
    auto small = termination_threshold(5, 0.5, 0.5);
    CHECK(small.holes == 1);
    CHECK(small.antiholes == 1);
    CHECK_THROWS_AS(termination_threshold(10, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(termination_threshold(10, 0.5, 1.5), std::domain_error);
    auto big = termination_threshold(400, 0.05, 1.0);
    CHECK(big.holes == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("expectation csv") {
    CHECK(expectation_csv({5}, {0.5}) == "n,p,e_holes,e_antiholes,e_total\n5,0.5,0.01171875,0,0.01171875\n");
}

}  // TEST_SUITE
