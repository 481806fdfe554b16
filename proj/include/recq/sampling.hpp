#pragma once

#include "recq/matrix.hpp"
#include "recq/phase.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace recq {

/// Per-position sampling unitaries over the oracle-cell alphabet
/// (0, ..., N-1, sentinel). The sentinel column carries the amplitudes of
/// the position's input distribution: S_x|sentinel> is the cell's initial
/// state in the standard model. The two built-in families share one matrix
/// across positions; arbitrary product distributions are supplied as one
/// unitary per position.
///
/// For every phase value p, the conjugated query action S† D_p S on a
/// single cell (D_p multiplying value y by omega^{p y} and fixing the
/// sentinel) is precomputed at construction; this matrix route is the
/// ground truth which the closed-form appliers are checked against.
class SamplingFamily {
public:
    enum class Kind { Uniform, Bernoulli, General };

    /// Involution exchanging |sentinel> with the uniform superposition and
    /// fixing the nonzero Fourier vectors. Entries: <y|S|y'> = delta - 1/N,
    /// <y|S|sentinel> = <sentinel|S|y> = 1/sqrt(N), <sentinel|S|sentinel> = 0.
    static SamplingFamily uniform(uint32_t range);

    /// 3x3 involution for cells that are 1 with probability k/n:
    /// alpha = sqrt(1-k/n), beta = sqrt(k/n); exchanges |sentinel> with
    /// alpha|0>+beta|1> and fixes beta|0>-alpha|1>. Requires 1 <= k <= n.
    static SamplingFamily bernoulli(uint32_t k, uint32_t n);

    /// One caller-supplied unitary per position. Each matrix must be
    /// unitary and must move the sentinel entirely into the value span
    /// (zero sentinel-to-sentinel entry); the rest is unconstrained.
    static SamplingFamily general(uint32_t range, std::vector<CMatrix> per_position);

    Kind kind() const { return kind_; }
    uint32_t range() const { return range_; }
    uint32_t positions() const;  // 0 means "same matrix for every position"

    const CMatrix& matrix(uint32_t position) const;
    const CMatrix& recording_matrix(uint32_t position, uint32_t p) const;

    double alpha() const;
    double beta() const;
    uint32_t dist_k() const;
    uint32_t dist_n() const;

    /// Row-major [re, im] pairs over the alphabet order (0,...,N-1, sentinel).
    std::string to_json() const;
    static SamplingFamily from_json(const std::string& text);

private:
    SamplingFamily() = default;
    void finish_construction();

    Kind kind_ = Kind::Uniform;
    uint32_t range_ = 1;
    uint32_t dist_k_ = 0;
    uint32_t dist_n_ = 0;
    std::vector<CMatrix> matrices_;            // 1 entry for shared families
    std::vector<std::vector<CMatrix>> rec_;    // [position][p], same sharing
};

}  // namespace recq
