#include "doctest.h"

#include "recq/random.hpp"
#include "recq/reduction.hpp"

#include <cmath>
#include <set>

using namespace recq;

namespace {

std::optional<std::pair<uint32_t, uint32_t>> quadratic_scan(const std::vector<uint32_t>& v) {
    std::optional<std::pair<uint32_t, uint32_t>> best;
    for (uint32_t i = 0; i < v.size(); ++i)
        for (uint32_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) {
                const std::pair<uint32_t, uint32_t> cand{i, j};
                if (!best || cand < *best) best = cand;
            }
    return best;
}

}  // namespace

TEST_CASE("primality and prime search") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(10001));
    CHECK(next_prime_at_least(10) == 11);
    CHECK(next_prime_at_least(100000) == 100003);
}

TEST_CASE("constant polynomial hashes constantly") {
    const FourWiseHash h = FourWiseHash::from_coefficients(5, {3, 0, 0, 0}, 4, 4);
    for (uint32_t i = 0; i < 4; ++i) CHECK(h(i) == 3);
}

TEST_CASE("field constraints are enforced") {
    CHECK_THROWS_AS(FourWiseHash::from_coefficients(4, {0, 0, 0, 0}, 3, 2),
                    std::invalid_argument);  // not prime
    CHECK_THROWS_AS(FourWiseHash::from_coefficients(5, {0, 0, 0, 0}, 5, 2),
                    std::invalid_argument);  // field not above the domain
}

TEST_CASE("tiny-field enumeration: every output pair is equally frequent") {
    std::vector<uint64_t> pair_counts(16, 0);
    for (uint64_t a0 = 0; a0 < 5; ++a0)
        for (uint64_t a1 = 0; a1 < 5; ++a1)
            for (uint64_t a2 = 0; a2 < 5; ++a2)
                for (uint64_t a3 = 0; a3 < 5; ++a3) {
                    const FourWiseHash h = FourWiseHash::from_coefficients(5, {a0, a1, a2, a3}, 4, 4);
                    if (!h.in_window()) continue;
                    ++pair_counts[h(0) * 4 + h(1)];
                }
    for (uint64_t c : pair_counts) CHECK(c == 16);
}

TEST_CASE("sampled hashes land in the fold window and are seed-deterministic") {
    const FourWiseHash a = FourWiseHash::sample(100, 1000, 42);
    const FourWiseHash b = FourWiseHash::sample(100, 1000, 42);
    CHECK(a.coefficients() == b.coefficients());
    CHECK(a.in_window());
    CHECK(a.field_modulus() > 100);
    CHECK(a.field_modulus() >= 1000);
}

TEST_CASE("sorted collision finder") {
    CHECK_FALSE(find_collision_sorted({4, 2, 7, 1}).has_value());
    const auto hit = find_collision_sorted({5, 3, 5});
    REQUIRE(hit.has_value());
    CHECK(*hit == std::pair<uint32_t, uint32_t>{0, 2});
}

TEST_CASE("sorted collision finder agrees with the quadratic scan") {
    Rng rng(89);
    for (int i = 0; i < 1000; ++i) {
        const uint32_t len = 2 + static_cast<uint32_t>(rng.below(24));
        const uint32_t range = 1 + static_cast<uint32_t>(rng.below(30));
        std::vector<uint32_t> v(len);
        for (auto& x : v) x = static_cast<uint32_t>(rng.below(range));
        CHECK(find_collision_sorted(v) == quadratic_scan(v));
    }
}

TEST_CASE("collision pair counting") {
    CHECK(collision_pair_count({0, 1, 2, 3}, 4) == 0);
    CHECK(collision_pair_count({1, 1, 1, 4}, 5) == 3);
    CHECK(collision_pair_count({0, 0, 1, 1}, 2) == 2);
}

TEST_CASE("reduction rounds on a constant input output almost always") {
    const uint32_t n = 50;
    const std::vector<uint32_t> f(300, 7);  // 300 points, one value
    const ReductionRunResult res = run_collision_reduction(f, n, 3);
    CHECK(res.rounds_executed == static_cast<uint32_t>(kRoundFactor * n));
    CHECK(res.outputs.size() > res.rounds_executed / 2);
    for (const auto& c : res.outputs) {
        CHECK(c.a != c.b);
        CHECK(f[c.a] == f[c.b]);
        CHECK(c.value == 7);
    }
    CHECK(res.target_reached);
}

TEST_CASE("injective inputs produce no output and a warning") {
    std::vector<uint32_t> f(64);
    for (uint32_t i = 0; i < 64; ++i) f[i] = i;
    const ReductionRunResult res = run_collision_reduction(f, 64, 5);
    CHECK(res.outputs.empty());
    CHECK(res.precondition_warning);
    CHECK_FALSE(res.target_reached);
}

TEST_CASE("every emitted collision is genuine on a random input") {
    Rng rng(97);
    const uint32_t n = 60;
    const std::vector<uint32_t> f = random_function(rng, 10 * n, n);
    const ReductionRunResult res = run_collision_reduction(f, n, 11);
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (const auto& c : res.outputs) {
        CHECK(c.a < c.b);
        CHECK(f[c.a] == f[c.b]);
        seen.insert({c.a, c.b});
    }
    CHECK(res.distinct == seen.size());
}

TEST_CASE("event frequencies behave on a squared domain") {
    // the hash domain is ceil(sqrt(D)), so its birthday ratio is about one
    // half regardless of D and the collision-free rate sits near exp(-1/2)
    const uint32_t n = 200;
    Rng rng(101);
    const std::vector<uint32_t> f = random_function(rng, n * n, n);
    const EventTally tally = monte_carlo_events(f, n, 4000, 7);
    CHECK(tally.hash_collision_free.freq > 0.55);
    CHECK(tally.hash_collision_free.freq < 0.68);
    CHECK(tally.hash_collision_free.pass);
    CHECK(tally.history_clear.pass);
}

TEST_CASE("composed-collision rate clears its bound at the pair threshold") {
    // exactly c0 * range collision pairs: 800 values of multiplicity 10
    // give 800 * 45 = 36000 = 40 * 900 pairs
    const uint32_t range = 900;
    std::vector<uint32_t> f;
    for (uint32_t v = 0; v < 800; ++v)
        for (int rep = 0; rep < 10; ++rep) f.push_back(v);
    REQUIRE(collision_pair_count(f, range) == 36000);
    const EventTally tally = monte_carlo_events(f, range, 4000, 13);
    CHECK(tally.composed_collision.bound == doctest::Approx(1.0 - 40.0 / 81.0).epsilon(1e-12));
    CHECK(tally.composed_collision.wilson_lo > tally.composed_collision.bound);
    CHECK(tally.conjunction.pass);
}

TEST_CASE("event report json carries the conservatism note and digest") {
    Rng rng(103);
    const std::vector<uint32_t> f = random_function(rng, 400, 40);
    const EventTally tally = monte_carlo_events(f, 40, 500, 17);
    const std::string json = event_report_json(tally, "deadbeef00000000");
    CHECK(json.find("\"conjunction\"") != std::string::npos);
    CHECK(json.find("deadbeef00000000") != std::string::npos);
    CHECK(json.find("conservative") != std::string::npos);
    CHECK(tally.subroutine_found.count == tally.composed_collision.count);
    const uint64_t least =
        std::min({tally.hash_collision_free.count, tally.history_clear.count,
                  tally.composed_collision.count, tally.subroutine_found.count});
    CHECK(tally.conjunction.count <= least);
}

TEST_CASE("multiplicity profiles") {
    SUBCASE("injective input has unit multiplicities") {
        std::vector<uint32_t> f(32);
        for (uint32_t i = 0; i < 32; ++i) f[i] = i;
        const MultiplicityProfile p = multicollision_profile(f, 32);
        CHECK(p.max_multiplicity == 1);
        CHECK(p.histogram.at(1) == 32);
        CHECK(p.disjoint_collisions == 0);
    }
    SUBCASE("constant input is one heavy bin") {
        const MultiplicityProfile p = multicollision_profile(std::vector<uint32_t>(9, 2), 4);
        CHECK(p.max_multiplicity == 9);
        CHECK(p.histogram.at(9) == 1);
        CHECK(p.disjoint_collisions == 4);
    }
    SUBCASE("balanced random inputs stay under twice the log") {
        const uint32_t n = 10000;
        for (uint64_t seed = 0; seed < 30; ++seed) {
            Rng rng(mix_seed(107, seed));
            const std::vector<uint32_t> f = random_function(rng, n, n);
            const MultiplicityProfile p = multicollision_profile(f, n);
            CHECK(static_cast<double>(p.max_multiplicity) <= 2.0 * std::log(n));
        }
    }
}
