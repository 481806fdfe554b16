#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace recq {

/// Classical emulation of the table-plus-search collision finder: each
/// round samples a memory-sized subset G of the domain, tables f on G for
/// S classical queries, then repeatedly runs an idealized search over the
/// points outside G that collide with the table. Search runs never fail;
/// each output pair is charged ceil(pi/4 * sqrt(|domain| / max(1, marked
/// points left))) queries, plus one terminating run per round at marked =
/// 0. Rounds repeat until `target_pairs` distinct collisions are found or
/// the round cap is hit.
struct EmulationConfig {
    uint32_t n = 1024;         // domain and range size of the random function
    uint32_t target_pairs = 1; // distinct collisions to collect
    uint32_t memory = 16;      // table size S
    uint64_t seed = 1;
};

struct EmulationResult {
    uint64_t queries = 0;
    uint32_t rounds = 0;
    bool reached_target = false;
    bool memory_outside_guard = false;  // S outside [log2(n), 4 K^{2/3} n^{1/3}]
    uint32_t distinct_collisions = 0;
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // as emitted, duplicates possible
};

EmulationResult emulate_collision_table_search(const EmulationConfig& cfg);

void write_emulation_csv_header(std::ostream& os);
void write_emulation_csv_row(std::ostream& os, const EmulationConfig& cfg,
                             const EmulationResult& res);

}  // namespace recq
