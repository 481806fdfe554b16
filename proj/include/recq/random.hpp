#pragma once

#include "recq/algorithm.hpp"
#include "recq/state.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace recq {

/// splitmix64 of (root, stream); used to derive independent per-point
/// seeds so grid workers stay deterministic regardless of scheduling.
uint64_t mix_seed(uint64_t root, uint64_t stream);

/// Deterministic source: the engine sequence is pinned by the standard,
/// and all distributions are hand-rolled so outputs are byte-stable
/// across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Unbiased value in [0, n).
    uint64_t below(uint64_t n);

    /// [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double gaussian();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    /// `count` distinct values from [0, n), ascending.
    std::vector<uint32_t> sample_distinct(uint32_t n, uint32_t count);

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

CMatrix random_unitary(Rng& rng, uint32_t n);
CMatrix random_permutation_gate(Rng& rng, uint32_t n);
std::vector<uint32_t> random_function(Rng& rng, uint32_t domain, uint32_t range);

/// Normalized sparse state with `components` distinct random components;
/// oracle cells range over the full alphabet including the sentinel.
QueryState random_sparse_state(Rng& rng, const RegisterLayout& layout, uint32_t components);

/// Random algorithm with `queries` queries; between queries it applies
/// one or two gates on random non-oracle registers, mixing Haar unitaries
/// (capped at dense_cap to bound recording-side fan-out) with random
/// permutations, and finishes by copying Q into the first output slot.
QueryAlgorithm random_algorithm(Rng& rng, const RegisterLayout& layout, uint32_t queries,
                                uint32_t dense_cap = 3);

}  // namespace recq
