#pragma once

#include "recq/dense.hpp"
#include "recq/state.hpp"

#include <cstdint>
#include <vector>

namespace recq {

/// What a run must leave in the output slots to count as a success.
///
/// CollisionPairs over K pairs reads the first 3K workspace slots as
/// triples (x1, x2, y); the claim is well-formed when all 2K positions are
/// distinct and no y is the sentinel, and correct when f maps both
/// positions of each triple to its y. KSearch over K positions reads the
/// first K slots; the claim is well-formed when the positions are distinct
/// and correct when f is 1 at each of them.
struct OutputRelation {
    enum class Kind { CollisionPairs, KSearch };

    Kind kind = Kind::CollisionPairs;
    uint32_t target_count = 1;

    static OutputRelation collisions(uint32_t k) { return {Kind::CollisionPairs, k}; }
    static OutputRelation ksearch(uint32_t k) { return {Kind::KSearch, k}; }

    struct Constraints {
        bool well_formed = false;
        std::vector<uint32_t> positions;  // oracle positions the claim constrains
        std::vector<uint32_t> required;   // value each position must hold
    };

    /// Parses the claim out of a workspace assignment. A malformed claim
    /// yields well_formed = false and contributes nothing anywhere.
    Constraints parse(const RegisterLayout& layout, const std::vector<uint32_t>& w) const;

    /// Claim well-formed and satisfied by the component's own oracle content.
    bool satisfied_by(const RegisterLayout& layout, const BasisComponent& c) const;
};

/// Squared norm of the components whose claim is correct against their own
/// materialized oracle content (standard-model or fixed-input states).
double success_probability_diagonal(const QueryState& s, const OutputRelation& rel);
double success_probability_diagonal(const DenseState& s, const OutputRelation& rel);

}  // namespace recq
