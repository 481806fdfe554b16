#pragma once

#include <array>
#include <cstdint>

namespace recq {

bool is_prime(uint64_t n);
uint64_t next_prime_at_least(uint64_t start, uint64_t window = 1'000'000);

/// Random degree-3 polynomial over a prime field, folded into [range] by
/// value mod range. Sampling rejects whole coefficient vectors whenever
/// some evaluation over the domain falls outside floor(q/range)*range, so
/// every accepted function is built from exactly uniform in-window values
/// and the joint distribution of any four evaluations stays intact at
/// domain sizes up to four. Evaluation is O(1); only the four coefficients
/// are kept.
class FourWiseHash {
public:
    static FourWiseHash sample(uint32_t domain, uint32_t range, uint64_t seed,
                               uint64_t min_field = 0);

    /// Fixed coefficient vector; used by exhaustive enumerations.
    static FourWiseHash from_coefficients(uint64_t field, std::array<uint64_t, 4> coeff,
                                          uint32_t domain, uint32_t range);

    uint32_t operator()(uint32_t i) const;
    uint64_t raw_eval(uint32_t i) const;
    bool in_window() const;  // every domain evaluation inside the fold window

    uint64_t field_modulus() const { return q_; }
    uint64_t window() const { return window_; }
    const std::array<uint64_t, 4>& coefficients() const { return coeff_; }
    uint32_t domain() const { return domain_; }
    uint32_t range() const { return range_; }

private:
    uint64_t q_ = 2;
    std::array<uint64_t, 4> coeff_{};  // a0, a1, a2, a3
    uint32_t domain_ = 0;
    uint32_t range_ = 1;
    uint64_t window_ = 2;
};

}  // namespace recq
