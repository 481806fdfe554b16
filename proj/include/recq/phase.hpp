#pragma once

#include "recq/matrix.hpp"

#include <cstdint>
#include <vector>

namespace recq {

/// The N complex roots of unity, precomputed once per modulus so that all
/// phase arithmetic reduces to index arithmetic mod N and stays bit-stable
/// across code paths.
class PhaseTable {
public:
    explicit PhaseTable(uint32_t modulus);

    uint32_t modulus() const { return n_; }

    /// omega^power with the exponent reduced mod N.
    cplx root(uint64_t power) const { return roots_[power % n_]; }

private:
    uint32_t n_;
    std::vector<cplx> roots_;
};

}  // namespace recq
