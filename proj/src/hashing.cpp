#include "recq/hashing.hpp"

#include "recq/random.hpp"

#include <stdexcept>

namespace recq {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

uint64_t next_prime_at_least(uint64_t start, uint64_t window) {
    for (uint64_t n = start; n < start + window; ++n)
        if (is_prime(n)) return n;
    throw std::runtime_error("no prime found in the search window");
}

FourWiseHash FourWiseHash::from_coefficients(uint64_t field, std::array<uint64_t, 4> coeff,
                                             uint32_t domain, uint32_t range) {
    if (!is_prime(field)) throw std::invalid_argument("hash: field modulus must be prime");
    if (field <= domain || field < range) throw std::invalid_argument("hash: field too small");
    FourWiseHash h;
    h.q_ = field;
    h.coeff_ = coeff;
    h.domain_ = domain;
    h.range_ = range;
    h.window_ = (field / range) * range;
    return h;
}

uint64_t FourWiseHash::raw_eval(uint32_t i) const {
    using u128 = unsigned __int128;
    uint64_t acc = coeff_[3];
    for (int d = 2; d >= 0; --d) acc = static_cast<uint64_t>((u128{acc} * i + coeff_[d]) % q_);
    return acc;
}

uint32_t FourWiseHash::operator()(uint32_t i) const {
    return static_cast<uint32_t>(raw_eval(i) % range_);
}

bool FourWiseHash::in_window() const {
    for (uint32_t i = 0; i < domain_; ++i)
        if (raw_eval(i) >= window_) return false;
    return true;
}

FourWiseHash FourWiseHash::sample(uint32_t domain, uint32_t range, uint64_t seed,
                                  uint64_t min_field) {
    if (range < 1 || domain < 1) throw std::invalid_argument("hash: empty domain or range");
    uint64_t start = std::max<uint64_t>(uint64_t{domain} + 1, range);
    start = std::max(start, min_field);
    const uint64_t q = next_prime_at_least(start);
    Rng rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        FourWiseHash h;
        h.q_ = q;
        h.domain_ = domain;
        h.range_ = range;
        h.window_ = (q / range) * range;
        for (auto& c : h.coeff_) c = rng.below(q);
        if (h.in_window()) return h;
    }
    throw std::runtime_error("hash: rejection sampling failed to land in the fold window");
}

}  // namespace recq
