#include "recq/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace recq {

PhaseTable::PhaseTable(uint32_t modulus) : n_(modulus) {
    if (modulus < 1) throw std::invalid_argument("phase table: modulus must be positive");
    roots_.resize(n_);
    for (uint32_t j = 0; j < n_; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
        roots_[j] = cplx{std::cos(angle), std::sin(angle)};
    }
}

}  // namespace recq
