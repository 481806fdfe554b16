#include "recq/oracles.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace recq {

QueryState apply_standard_oracle(const QueryState& s) {
    const RegisterLayout& layout = s.layout();
    const PhaseTable phases(layout.range_size());
    QueryState out(layout);
    for (const auto& [c, a] : s.amplitudes()) {
        const uint32_t fx = c.f[c.x];
        if (fx == layout.bottom())
            out.set(c, a);
        else
            out.set(c, a * phases.root(uint64_t{c.p} * fx));
    }
    return out;
}

DenseState apply_standard_oracle(const DenseState& s) {
    const RegisterLayout& layout = s.layout();
    const PhaseTable phases(layout.range_size());
    const uint64_t qs = s.stride(RegisterRef::q());
    const uint64_t ps = s.stride(RegisterRef::p());
    const uint32_t n = layout.range_size();
    DenseState out = s;
    for (uint64_t i = 0; i < s.dimension(); ++i) {
        if (out.data()[i] == 0.0) continue;
        const uint32_t x = static_cast<uint32_t>(i / qs);
        const uint32_t p = static_cast<uint32_t>((i / ps) % n);
        const uint32_t fx = static_cast<uint32_t>((i / s.stride(RegisterRef::f(x))) % (n + 1));
        if (fx != layout.bottom()) out.data()[i] *= phases.root(uint64_t{p} * fx);
    }
    return out;
}

namespace {

QueryState apply_cell_matrix(const QueryState& s,
                             const std::function<const CMatrix&(uint32_t x, uint32_t p)>& pick) {
    const RegisterLayout& layout = s.layout();
    const uint32_t cell_dim = layout.range_size() + 1;
    QueryState out(layout);
    for (const auto& [c, a] : s.amplitudes()) {
        const CMatrix& r = pick(c.x, c.p);
        const uint32_t col = c.f[c.x];
        BasisComponent nc = c;
        for (uint32_t row = 0; row < cell_dim; ++row) {
            const cplx v = r(row, col);
            if (v == 0.0) continue;
            nc.f[nc.x] = row;
            out.add(nc, v * a);
        }
    }
    out.prune();
    return out;
}

}  // namespace

QueryState apply_recording_oracle(const QueryState& s, const SamplingFamily& family) {
    if (family.range() != s.layout().range_size())
        throw std::invalid_argument("recording query: family range does not match layout");
    return apply_cell_matrix(
        s, [&family](uint32_t x, uint32_t p) -> const CMatrix& { return family.recording_matrix(x, p); });
}

CMatrix closed_form_uniform_matrix(uint32_t range, uint32_t p, BottomCoefficient variant) {
    const uint32_t n = range;
    const uint32_t sentinel = n;
    CMatrix r(n + 1);
    if (p % n == 0) return CMatrix::identity(n + 1);
    const PhaseTable phases(n);
    const double dn = static_cast<double>(n);
    const double bottom_scale = variant == BottomCoefficient::InverseSqrtN ? std::sqrt(dn) : dn;
    // a fresh cell fans out into the phased uniform superposition
    for (uint32_t y = 0; y < n; ++y) r(y, sentinel) = phases.root(uint64_t{p} * y) / std::sqrt(dn);
    r(sentinel, sentinel) = 0.0;
    for (uint32_t v = 0; v < n; ++v) {
        const cplx wv = phases.root(uint64_t{p} * v);
        r(sentinel, v) = wv / bottom_scale;
        for (uint32_t y = 0; y < n; ++y) {
            if (y == v)
                r(y, v) = (1.0 + wv * (dn - 2.0)) / dn;
            else
                r(y, v) = (1.0 - phases.root(uint64_t{p} * y) - wv) / dn;
        }
    }
    return r;
}

CMatrix closed_form_bernoulli_matrix(double alpha, double beta, uint32_t p) {
    if (p % 2 == 0) return CMatrix::identity(3);
    const double a = alpha, b = beta;
    CMatrix r(3);
    // columns: current cell value 0, 1, sentinel; rows in the same order
    r(0, 0) = 1.0 - 2.0 * a * a * b * b;
    r(1, 0) = 2.0 * a * a * a * b;
    r(2, 0) = 2.0 * a * b * b;
    r(0, 1) = 2.0 * a * a * a * b;
    r(1, 1) = 1.0 - 2.0 * a * a * a * a;
    r(2, 1) = -2.0 * a * a * b;
    r(0, 2) = 2.0 * a * b * b;
    r(1, 2) = -2.0 * a * a * b;
    r(2, 2) = 1.0 - 2.0 * b * b;
    return r;
}

QueryState apply_recording_oracle_uniform(const QueryState& s) {
    const uint32_t n = s.layout().range_size();
    std::vector<CMatrix> per_p;
    per_p.reserve(n);
    for (uint32_t p = 0; p < n; ++p) per_p.push_back(closed_form_uniform_matrix(n, p));
    return apply_cell_matrix(s, [&per_p](uint32_t, uint32_t p) -> const CMatrix& { return per_p[p]; });
}

QueryState apply_recording_oracle_bernoulli(const QueryState& s, const SamplingFamily& family) {
    if (family.kind() != SamplingFamily::Kind::Bernoulli)
        throw std::invalid_argument("closed-form recording query: not a bernoulli family");
    if (s.layout().range_size() != 2)
        throw std::invalid_argument("closed-form recording query: layout range must be 2");
    const CMatrix even = closed_form_bernoulli_matrix(family.alpha(), family.beta(), 0);
    const CMatrix odd = closed_form_bernoulli_matrix(family.alpha(), family.beta(), 1);
    return apply_cell_matrix(
        s, [&even, &odd](uint32_t, uint32_t p) -> const CMatrix& { return p % 2 ? odd : even; });
}

DenseState apply_translation(const DenseState& s, const SamplingFamily& family, bool adjoint) {
    const RegisterLayout& layout = s.layout();
    if (family.range() != layout.range_size())
        throw std::invalid_argument("translation: family range does not match layout");
    const uint32_t m = layout.domain_size();
    const uint32_t cell = layout.range_size() + 1;

    std::vector<CMatrix> mats;
    mats.reserve(m);
    for (uint32_t x = 0; x < m; ++x)
        mats.push_back(adjoint ? family.matrix(x).adjoint() : family.matrix(x));

    // The translation only mixes oracle cells, so each (x, p, w) block maps
    // onto itself; zero blocks are skipped outright.
    const uint64_t f_block = s.stride(RegisterRef::f(0)) * cell;  // cell^M

    DenseState out = s;
    std::vector<cplx> tmp(cell);
    for (uint64_t base = 0; base < s.dimension(); base += f_block) {
        bool live = false;
        for (uint64_t i = 0; i < f_block && !live; ++i) live = out.data()[base + i] != 0.0;
        if (!live) continue;
        for (uint32_t x = 0; x < m; ++x) {
            const CMatrix& u = mats[x];
            const uint64_t stride = s.stride(RegisterRef::f(x));
            const uint64_t outer = f_block / (stride * cell);
            for (uint64_t hi = 0; hi < outer; ++hi) {
                const uint64_t hi_base = base + hi * stride * cell;
                for (uint64_t lo = 0; lo < stride; ++lo) {
                    for (uint32_t v = 0; v < cell; ++v) tmp[v] = out.data()[hi_base + lo + v * stride];
                    for (uint32_t r = 0; r < cell; ++r) {
                        cplx acc = 0.0;
                        for (uint32_t cidx = 0; cidx < cell; ++cidx) acc += u(r, cidx) * tmp[cidx];
                        out.data()[hi_base + lo + r * stride] = acc;
                    }
                }
            }
        }
    }
    return out;
}

DenseState translated(const QueryState& s, const SamplingFamily& family) {
    return apply_translation(DenseState::from_sparse(s), family);
}

double success_projection_recording(const QueryState& s, const OutputRelation& rel,
                                    const SamplingFamily& family) {
    const RegisterLayout& layout = s.layout();
    if (family.range() != layout.range_size())
        throw std::invalid_argument("success projection: family range does not match layout");
    const uint32_t marker = layout.bottom() + 1;  // stands in for "claimed position"

    std::map<BasisComponent, cplx> groups;
    for (const auto& [c, a] : s.amplitudes()) {
        const OutputRelation::Constraints z = rel.parse(layout, c.w);
        if (!z.well_formed) continue;
        cplx factor = a;
        BasisComponent key = c;
        for (std::size_t i = 0; i < z.positions.size(); ++i) {
            const uint32_t pos = z.positions[i];
            factor *= family.matrix(pos)(z.required[i], c.f[pos]);
            key.f[pos] = marker;
        }
        if (factor == 0.0) continue;
        groups[key] += factor;
    }
    double total = 0.0;
    for (const auto& [key, v] : groups) total += std::norm(v);
    return total;
}

}  // namespace recq
