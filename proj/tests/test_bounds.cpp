#include "doctest.h"

#include "recq/bounds.hpp"

#include <algorithm>
#include <cmath>

using namespace recq;

namespace {

double direct_binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0.0;
    double r = 1.0;
    for (uint64_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

double direct_collision_progress(uint64_t t, uint64_t k, double n) {
    if (k == 0) return 1.0;
    return direct_binomial(t, k) * std::pow(4.0 * std::sqrt(static_cast<double>(t) / n),
                                            static_cast<double>(k));
}

}  // namespace

TEST_CASE("progress envelopes at the corners") {
    CHECK(collision_progress_bound(0, 0, 16.0) == 1.0);
    CHECK(collision_progress_bound(7, 0, 16.0) == 1.0);
    CHECK(collision_progress_bound(2, 5, 16.0) == 0.0);
    CHECK(ksearch_progress_bound(0, 0, 2.0, 16.0) == 1.0);
    CHECK(ksearch_progress_bound(3, 7, 2.0, 16.0) == 0.0);
}

TEST_CASE("collision envelope frozen value") {
    // binom(4,2) * (4*2/10)^2 = 6 * 0.64
    CHECK(collision_progress_bound(4, 2, 100.0) == doctest::Approx(3.84).epsilon(1e-12));
}

TEST_CASE("log-domain evaluation matches the direct product form") {
    for (uint64_t t = 0; t <= 12; ++t)
        for (uint64_t k = 0; k <= std::min<uint64_t>(t, 6); ++k)
            for (double n : {4.0, 64.0, 1e4}) {
                const double a = collision_progress_bound(t, k, n);
                const double b = direct_collision_progress(t, k, n);
                if (b > 0.0) CHECK(std::abs(a - b) / b < 1e-10);
            }
}

TEST_CASE("success bound frozen value at zero queries") {
    const BoundValue b = collision_success_bound(0, 2, 100.0);
    // progress side vanishes; guess side is n (2k/n)^1 = 4, doubled and squared
    CHECK(b.raw == doctest::Approx(32.0).epsilon(1e-12));
    CHECK(b.clamped == 1.0);
}

TEST_CASE("range warnings trigger strictly above one eighth") {
    CHECK_FALSE(collision_success_bound(3, 2, 16.0).range_warning);
    CHECK(collision_success_bound(3, 3, 16.0).range_warning);
    CHECK_FALSE(ksearch_success_bound(3, 2, 16.0).range_warning);
    CHECK(ksearch_success_bound(3, 2, 15.0).range_warning);
}

TEST_CASE("collision success bound is nondecreasing in the query count") {
    for (uint32_t k : {1u, 2u, 4u}) {
        double prev = collision_success_bound(0, k, 256.0).raw;
        for (uint64_t t = 1; t <= 24; ++t) {
            const double cur = collision_success_bound(t, k, 256.0).raw;
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("odd target counts round the split upward") {
    // ceil(3/2) = 2 appears in both exponents
    const BoundValue b = collision_success_bound(0, 3, 100.0);
    CHECK(b.raw == doctest::Approx(2.0 * std::pow(100.0 * std::pow(6.0 / 100.0, 2), 2))
                       .epsilon(1e-12));
}

TEST_CASE("lower and upper collision curves meet at the matching memory size") {
    const double k = 64.0, n = 4096.0;
    const double s_star = std::pow(k, 2.0 / 3.0) * std::cbrt(n);
    const TradeoffCurve lower = collision_lower_curve(k, n, {s_star});
    const TradeoffCurve upper = collision_upper_curve(k, n, {s_star});
    const double floor_t = lower.rows[0][4];
    const double upper_t = upper.rows[0][3];
    CHECK(floor_t == doctest::Approx(upper_t).epsilon(1e-9));
}

TEST_CASE("doubling memory divides the sorting curve by sqrt(2)") {
    const TradeoffCurve c = sorting_lower_curve(1024.0, {16.0, 32.0});
    CHECK(c.rows[1][2] == doctest::Approx(c.rows[0][2] / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("log-memory point of the lower curve scales like n to the four thirds") {
    const double n = 4096.0, k = n / 8.0;
    const double s = std::log2(n);
    const TradeoffCurve c = collision_lower_curve(k, n, {s});
    const double expect = (k / (3.0 * s)) * std::pow(s, 2.0 / 3.0) * std::cbrt(n);
    CHECK(c.rows[0][3] == doctest::Approx(expect).epsilon(1e-12));
    CHECK(c.rows[0][3] > std::pow(n, 4.0 / 3.0) / (24.0 * std::cbrt(s)) * 0.999);
}

TEST_CASE("curve metadata names the constants") {
    const TradeoffCurve c = collision_lower_curve(8.0, 256.0, {4.0});
    const std::string meta = curve_metadata_json(c);
    CHECK(meta.find("output_rate") != std::string::npos);
    CHECK(meta.find("collision-lower") != std::string::npos);
}

TEST_CASE("sorting instance layout") {
    SUBCASE("rank one with a zero function is all zero") {
        const auto f = build_sorting_instance(std::vector<uint32_t>(4, 0), 1, 8);
        CHECK(f == std::vector<uint32_t>(8, 0));
    }
    SUBCASE("frozen example") {
        const auto f = build_sorting_instance({1, 0, 1, 0}, 3, 8);
        CHECK(f == std::vector<uint32_t>{2, 2, 1, 0, 1, 0, 0, 0});
    }
    SUBCASE("descending sort puts the carried ones right after the twos") {
        const std::vector<uint32_t> g{1, 0, 1, 1};
        const uint32_t rank = 3, n = 8;
        const auto f = build_sorting_instance(g, rank, n);
        std::vector<uint32_t> order(n);
        for (uint32_t i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](uint32_t a, uint32_t b) { return f[a] > f[b]; });
        uint32_t ones = 0;
        for (uint32_t v : g) ones += v;
        for (uint32_t r = 0; r < rank - 1; ++r) CHECK(f[order[r]] == 2);
        for (uint32_t r = rank - 1; r < rank - 1 + ones; ++r) CHECK(f[order[r]] == 1);
    }
    SUBCASE("bad parameters are rejected") {
        CHECK_THROWS_AS(build_sorting_instance({0, 0}, 3, 4), std::invalid_argument);
        CHECK_THROWS_AS(build_sorting_instance({0, 0, 0}, 1, 7), std::invalid_argument);
        CHECK_THROWS_AS(build_sorting_instance({0, 2}, 1, 4), std::invalid_argument);
    }
}
