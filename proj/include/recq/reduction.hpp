#pragma once

#include "recq/hashing.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recq {

/// Constants of the round analysis: a usable input carries at least
/// kMinCollisionFactor * N collision pairs, the run succeeds once
/// kOutputFactor * N distinct collisions are out, and it executes
/// kRoundFactor * N rounds.
inline constexpr double kMinCollisionFactor = 40.0;  // c0
inline constexpr double kOutputFactor = 1e-4;        // c1
inline constexpr double kRoundFactor = 8.0;          // c2

/// Number of unordered pairs (x < x') with f(x) = f(x').
uint64_t collision_pair_count(const std::vector<uint32_t>& f, uint32_t range);

/// Deterministic sort-based collision finder; returns the lexicographically
/// smallest colliding index pair, or nothing for injective input.
std::optional<std::pair<uint32_t, uint32_t>> find_collision_sorted(
    const std::vector<uint32_t>& values);

struct CollisionOutput {
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t value = 0;
};

struct ReductionRunResult {
    std::vector<CollisionOutput> outputs;  // duplicates allowed, as emitted
    uint64_t distinct = 0;
    uint32_t rounds_executed = 0;
    uint32_t rounds_until_target = 0;  // 0 when the target was never reached
    bool target_reached = false;
    bool precondition_warning = false;  // input has fewer than c0*N collision pairs
};

/// Runs kRoundFactor * range rounds; each round samples a fresh hash from
/// [ceil(sqrt(|f|))] into [|f|], solves collision finding on f∘h by
/// sorting, and emits (h(i), h(j)) when the hashed points differ.
ReductionRunResult run_collision_reduction(const std::vector<uint32_t>& f, uint32_t range,
                                           uint64_t seed);

struct EventStats {
    uint64_t count = 0;
    uint64_t total = 0;
    double freq = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 1.0;
    double bound = 0.0;
    bool pass = false;  // the 95% interval does not contradict the lower bound
};

struct EventTally {
    EventStats hash_collision_free;   // A
    EventStats history_clear;         // B
    EventStats composed_collision;    // C
    EventStats subroutine_found;      // D
    EventStats conjunction;
    uint64_t history_resets = 0;
    std::string note;
};

/// Estimates the per-round event frequencies over independent rounds. The
/// output history that event B is judged against is reset every time it
/// reaches kOutputFactor * range distinct collisions, so each tallied
/// round sees the history of a not-yet-successful run. The collision
/// subroutine is deterministic and complete, so D coincides with C and the
/// measured conjunction is an upper-compatible stand-in for a 2/3-accurate
/// subroutine (noted in the report).
EventTally monte_carlo_events(const std::vector<uint32_t>& f, uint32_t range, uint64_t rounds,
                              uint64_t seed);

std::string event_report_json(const EventTally& tally, const std::string& config_digest);

struct MultiplicityProfile {
    std::map<uint32_t, uint64_t> histogram;  // multiplicity -> number of values
    uint32_t max_multiplicity = 0;
    uint64_t disjoint_collisions = 0;        // sum of floor(multiplicity / 2)
};

MultiplicityProfile multicollision_profile(const std::vector<uint32_t>& f, uint32_t range);

}  // namespace recq
