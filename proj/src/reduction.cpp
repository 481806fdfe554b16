#include "recq/reduction.hpp"

#include "recq/format.hpp"
#include "recq/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace recq {

uint64_t collision_pair_count(const std::vector<uint32_t>& f, uint32_t range) {
    std::vector<uint64_t> mult(range, 0);
    for (uint32_t v : f) {
        if (v >= range) throw std::invalid_argument("collision count: value out of range");
        ++mult[v];
    }
    uint64_t pairs = 0;
    for (uint64_t m : mult) pairs += m * (m - 1) / 2;
    return pairs;
}

std::optional<std::pair<uint32_t, uint32_t>> find_collision_sorted(
    const std::vector<uint32_t>& values) {
    const uint32_t n = static_cast<uint32_t>(values.size());
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return values[a] != values[b] ? values[a] < values[b] : a < b;
    });
    std::optional<std::pair<uint32_t, uint32_t>> best;
    for (uint32_t i = 0; i + 1 < n; ++i) {
        if (values[order[i]] != values[order[i + 1]]) continue;
        // order is ascending by index inside a value run, so this pair is
        // the smallest for its value; skip to the end of the run
        std::pair<uint32_t, uint32_t> cand{order[i], order[i + 1]};
        if (!best || cand < *best) best = cand;
        while (i + 1 < n && values[order[i]] == values[order[i + 1]]) ++i;
    }
    return best;
}

namespace {

uint32_t hash_domain_size(std::size_t input_size) {
    return static_cast<uint32_t>(std::ceil(std::sqrt(static_cast<double>(input_size))));
}

}  // namespace

ReductionRunResult run_collision_reduction(const std::vector<uint32_t>& f, uint32_t range,
                                           uint64_t seed) {
    ReductionRunResult res;
    const uint32_t big_domain = static_cast<uint32_t>(f.size());
    const uint32_t d = hash_domain_size(f.size());
    const uint64_t rounds = static_cast<uint64_t>(kRoundFactor * range);
    const uint64_t target =
        std::max<uint64_t>(1, static_cast<uint64_t>(std::llround(kOutputFactor * range)));

    res.precondition_warning =
        collision_pair_count(f, range) < static_cast<uint64_t>(kMinCollisionFactor * range);

    std::set<std::pair<uint32_t, uint32_t>> distinct;
    std::vector<uint32_t> composed(d);
    for (uint64_t round = 0; round < rounds; ++round) {
        const FourWiseHash h = FourWiseHash::sample(d, big_domain, mix_seed(seed, round));
        for (uint32_t i = 0; i < d; ++i) composed[i] = f[h(i)];
        const auto hit = find_collision_sorted(composed);
        if (!hit) continue;
        const uint32_t a = h(hit->first);
        const uint32_t b = h(hit->second);
        if (a == b) continue;
        res.outputs.push_back({std::min(a, b), std::max(a, b), composed[hit->first]});
        distinct.insert({std::min(a, b), std::max(a, b)});
        if (!res.target_reached && distinct.size() >= target) {
            res.target_reached = true;
            res.rounds_until_target = static_cast<uint32_t>(round + 1);
        }
    }
    res.rounds_executed = static_cast<uint32_t>(rounds);
    res.distinct = distinct.size();
    return res;
}

namespace {

void finish(EventStats& e, double bound) {
    e.freq = e.total ? static_cast<double>(e.count) / static_cast<double>(e.total) : 0.0;
    const WilsonInterval w = wilson(e.count, e.total);
    e.wilson_lo = w.lo;
    e.wilson_hi = w.hi;
    e.bound = bound;
    e.pass = e.wilson_hi >= bound;
}

}  // namespace

EventTally monte_carlo_events(const std::vector<uint32_t>& f, uint32_t range, uint64_t rounds,
                              uint64_t seed) {
    EventTally tally;
    const uint32_t big_domain = static_cast<uint32_t>(f.size());
    const uint32_t d = hash_domain_size(f.size());
    const uint64_t target =
        std::max<uint64_t>(1, static_cast<uint64_t>(std::llround(kOutputFactor * range)));

    std::vector<std::pair<uint32_t, uint32_t>> history;
    std::set<std::pair<uint32_t, uint32_t>> history_distinct;
    std::vector<uint32_t> composed(d);
    std::vector<uint32_t> image;
    image.reserve(d);

    auto& a = tally.hash_collision_free;
    auto& b = tally.history_clear;
    auto& c = tally.composed_collision;
    auto& dd = tally.subroutine_found;
    auto& conj = tally.conjunction;

    for (uint64_t round = 0; round < rounds; ++round) {
        const FourWiseHash h = FourWiseHash::sample(d, big_domain, mix_seed(seed, round));
        image.clear();
        for (uint32_t i = 0; i < d; ++i) image.push_back(h(i));
        std::vector<uint32_t> sorted_image = image;
        std::sort(sorted_image.begin(), sorted_image.end());
        const bool ev_a =
            std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end();

        bool ev_b = true;
        for (const auto& [u, v] : history) {
            const bool u_in = std::binary_search(sorted_image.begin(), sorted_image.end(), u);
            const bool v_in = std::binary_search(sorted_image.begin(), sorted_image.end(), v);
            if (u_in && v_in) {
                ev_b = false;
                break;
            }
        }

        for (uint32_t i = 0; i < d; ++i) composed[i] = f[image[i]];
        const auto hit = find_collision_sorted(composed);
        const bool ev_c = hit.has_value();
        const bool ev_d = ev_c;  // deterministic, complete subroutine

        ++a.total;
        a.count += ev_a;
        ++b.total;
        b.count += ev_b;
        ++c.total;
        c.count += ev_c;
        ++dd.total;
        dd.count += ev_d;
        ++conj.total;
        conj.count += (ev_a && ev_b && ev_c && ev_d) ? 1 : 0;

        if (hit) {
            const uint32_t u = image[hit->first];
            const uint32_t v = image[hit->second];
            if (u != v) {
                history.push_back({std::min(u, v), std::max(u, v)});
                history_distinct.insert({std::min(u, v), std::max(u, v)});
                if (history_distinct.size() >= target) {
                    // a real run would have stopped; start a fresh history
                    history.clear();
                    history_distinct.clear();
                    ++tally.history_resets;
                }
            }
        }
    }

    const double c0 = kMinCollisionFactor;
    finish(a, 0.5);
    finish(b, 1.0 - kOutputFactor);
    finish(c, 1.0 - 4.0 * (1.0 + std::sqrt(1.0 + 2.0 * c0)) / (1.0 + 2.0 * c0));
    finish(dd, 0.0);
    finish(conj, 1.0 / 250.0);
    tally.note =
        "collision subroutine is deterministic and complete, so the found-rate matches the "
        "composed-collision rate and the conjunction is conservative against a 2/3 subroutine";
    return tally;
}

namespace {

std::string event_json(const char* name, const EventStats& e) {
    std::string out = "\"";
    out += name;
    out += "\":{\"count\":" + std::to_string(e.count) + ",\"total\":" + std::to_string(e.total) +
           ",\"freq\":" + format_double(e.freq) + ",\"wilson_lo\":" + format_double(e.wilson_lo) +
           ",\"wilson_hi\":" + format_double(e.wilson_hi) + ",\"bound\":" + format_double(e.bound) +
           ",\"pass\":" + (e.pass ? "true" : "false") + "}";
    return out;
}

}  // namespace

std::string event_report_json(const EventTally& tally, const std::string& config_digest) {
    std::string out = "{";
    out += event_json("A", tally.hash_collision_free) + ",";
    out += event_json("B", tally.history_clear) + ",";
    out += event_json("C", tally.composed_collision) + ",";
    out += event_json("D", tally.subroutine_found) + ",";
    out += event_json("conjunction", tally.conjunction) + ",";
    out += "\"history_resets\":" + std::to_string(tally.history_resets) + ",";
    out += "\"note\":\"" + tally.note + "\",";
    out += "\"config_hash\":\"" + config_digest + "\",";
    out += "\"version\":\"" + std::string(kToolVersion) + "\"}";
    return out;
}

MultiplicityProfile multicollision_profile(const std::vector<uint32_t>& f, uint32_t range) {
    std::vector<uint64_t> mult(range, 0);
    for (uint32_t v : f) {
        if (v >= range) throw std::invalid_argument("multiplicity profile: value out of range");
        ++mult[v];
    }
    MultiplicityProfile p;
    for (uint64_t m : mult) {
        if (m == 0) continue;
        ++p.histogram[static_cast<uint32_t>(m)];
        p.max_multiplicity = std::max(p.max_multiplicity, static_cast<uint32_t>(m));
        p.disjoint_collisions += m / 2;
    }
    return p;
}

}  // namespace recq
