#include "recq/emulate.hpp"

#include "recq/format.hpp"
#include "recq/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>

namespace recq {

namespace {

uint64_t search_charge(uint32_t domain_left, uint32_t marked_left) {
    const double runs =
        std::ceil(std::numbers::pi / 4.0 *
                  std::sqrt(static_cast<double>(domain_left) / std::max<uint32_t>(1, marked_left)));
    return static_cast<uint64_t>(runs);
}

}  // namespace

EmulationResult emulate_collision_table_search(const EmulationConfig& cfg) {
    EmulationResult res;
    const uint32_t n = cfg.n;
    const uint32_t s = std::min(cfg.memory, n);
    Rng rng(cfg.seed);

    const double upper_guard =
        4.0 * std::pow(static_cast<double>(cfg.target_pairs), 2.0 / 3.0) * std::cbrt(n);
    res.memory_outside_guard =
        static_cast<double>(s) < std::log2(static_cast<double>(n)) || static_cast<double>(s) > upper_guard;

    const std::vector<uint32_t> f = random_function(rng, n, n);
    std::vector<std::vector<uint32_t>> preimages(n);
    for (uint32_t x = 0; x < n; ++x) preimages[f[x]].push_back(x);

    std::set<std::pair<uint32_t, uint32_t>> distinct;
    const uint32_t round_cap =
        64 * std::max<uint32_t>(1, (cfg.target_pairs + s - 1) / s) *
        std::max<uint32_t>(1, static_cast<uint32_t>(std::ceil(std::log2(std::max<uint32_t>(2, n)))));

    std::vector<bool> in_g(n, false);
    for (uint32_t round = 0; round < round_cap && distinct.size() < cfg.target_pairs; ++round) {
        ++res.rounds;
        const std::vector<uint32_t> g = rng.sample_distinct(n, s);
        for (uint32_t x : g) in_g[x] = true;
        res.queries += s;  // classical table construction

        // collect, per marked outside point, its partners inside the table
        std::vector<std::pair<uint32_t, std::vector<uint32_t>>> marked;  // (outside x, inside partners)
        {
            std::set<uint32_t> values_seen;
            for (uint32_t x : g) {
                if (!values_seen.insert(f[x]).second) continue;
                const auto& pre = preimages[f[x]];
                std::vector<uint32_t> inside, outside;
                for (uint32_t y : pre) (in_g[y] ? inside : outside).push_back(y);
                for (uint32_t y : outside) marked.push_back({y, inside});
            }
        }
        std::sort(marked.begin(), marked.end());

        uint32_t marked_left = static_cast<uint32_t>(marked.size());
        const uint32_t domain_left = n - s;
        bool done = false;
        for (const auto& [outside_x, partners] : marked) {
            for (uint32_t inside_x : partners) {
                res.queries += search_charge(domain_left, marked_left);
                const auto pr = std::minmax(inside_x, outside_x);
                res.pairs.push_back({pr.first, pr.second});
                distinct.insert({pr.first, pr.second});
                if (distinct.size() >= cfg.target_pairs) {
                    done = true;
                    break;
                }
            }
            if (done) break;
            marked_left = marked_left > 0 ? marked_left - 1 : 0;
        }
        if (!done) res.queries += search_charge(domain_left, 0);  // terminating run

        for (uint32_t x : g) in_g[x] = false;
    }

    res.distinct_collisions = static_cast<uint32_t>(distinct.size());
    res.reached_target = distinct.size() >= cfg.target_pairs;
    return res;
}

void write_emulation_csv_header(std::ostream& os) { os << "N,K,S,seed,queries,collisions_found\n"; }

void write_emulation_csv_row(std::ostream& os, const EmulationConfig& cfg,
                             const EmulationResult& res) {
    os << cfg.n << ',' << cfg.target_pairs << ',' << cfg.memory << ',' << cfg.seed << ','
       << res.queries << ',' << res.distinct_collisions << '\n';
}

}  // namespace recq
