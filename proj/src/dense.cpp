#include "recq/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace recq {

DenseState::DenseState(RegisterLayout layout) : layout_(std::move(layout)) {
    if (!layout_.dense_feasible())
        throw std::invalid_argument(
            "dense state: dimension exceeds the dense limit; "
            "use the recording-side projection instead");

    const uint32_t m = layout_.domain_size();
    const uint32_t n = layout_.range_size();

    f_strides_.assign(m, 1);
    f_block_ = 1;
    for (uint32_t x = m; x-- > 0;) {
        f_strides_[x] = f_block_;
        f_block_ *= n + 1;
    }
    const auto& slots = layout_.slots();
    w_strides_.assign(slots.size(), f_block_);
    uint64_t acc = f_block_;
    for (std::size_t j = slots.size(); j-- > 0;) {
        w_strides_[j] = acc;
        acc *= slots[j].cardinality;
    }
    p_stride_ = acc;
    q_stride_ = acc * n;

    v_.assign(layout_.total_dimension(), cplx{0.0});
}

uint64_t DenseState::stride(const RegisterRef& ref) const {
    switch (ref.kind) {
        case RegisterRef::Kind::Query: return q_stride_;
        case RegisterRef::Kind::Phase: return p_stride_;
        case RegisterRef::Kind::Work: return w_strides_.at(ref.index);
        case RegisterRef::Kind::OraclePos: return f_strides_.at(ref.index);
    }
    throw std::invalid_argument("bad register kind");
}

uint64_t DenseState::encode(const BasisComponent& c) const {
    uint64_t idx = uint64_t{c.x} * q_stride_ + uint64_t{c.p} * p_stride_;
    for (std::size_t j = 0; j < c.w.size(); ++j) idx += uint64_t{c.w[j]} * w_strides_[j];
    for (std::size_t x = 0; x < c.f.size(); ++x) idx += uint64_t{c.f[x]} * f_strides_[x];
    return idx;
}

BasisComponent DenseState::decode(uint64_t index) const {
    BasisComponent c;
    const uint32_t m = layout_.domain_size();
    c.x = static_cast<uint32_t>(index / q_stride_);
    index %= q_stride_;
    c.p = static_cast<uint32_t>(index / p_stride_);
    index %= p_stride_;
    const auto& slots = layout_.slots();
    c.w.resize(slots.size());
    for (std::size_t j = 0; j < slots.size(); ++j) {
        c.w[j] = static_cast<uint32_t>(index / w_strides_[j]);
        index %= w_strides_[j];
    }
    c.f.resize(m);
    for (uint32_t x = 0; x < m; ++x) {
        c.f[x] = static_cast<uint32_t>(index / f_strides_[x]);
        index %= f_strides_[x];
    }
    return c;
}

DenseState DenseState::from_sparse(const QueryState& s) {
    DenseState d(s.layout());
    for (const auto& [c, a] : s.amplitudes()) d.v_[d.encode(c)] = a;
    return d;
}

QueryState DenseState::to_sparse(double eps) const {
    QueryState s(layout_);
    for (uint64_t i = 0; i < v_.size(); ++i)
        if (std::abs(v_[i]) >= eps) s.set(decode(i), v_[i]);
    return s;
}

double norm(const DenseState& s) {
    double n2 = 0.0;
    for (const cplx& a : s.data()) n2 += std::norm(a);
    return std::sqrt(n2);
}

double distance(const DenseState& a, const DenseState& b) {
    if (!(a.layout() == b.layout())) throw std::invalid_argument("dense distance: layout mismatch");
    double n2 = 0.0;
    for (uint64_t i = 0; i < a.dimension(); ++i) n2 += std::norm(a.data()[i] - b.data()[i]);
    return std::sqrt(n2);
}

double max_amplitude_diff(const DenseState& dense, const QueryState& sparse) {
    if (!(dense.layout() == sparse.layout()))
        throw std::invalid_argument("representation diff: layout mismatch");
    DenseState other = DenseState::from_sparse(sparse);
    double d = 0.0;
    for (uint64_t i = 0; i < dense.dimension(); ++i)
        d = std::max(d, std::abs(dense.data()[i] - other.data()[i]));
    return d;
}

DenseState apply_unitary(const DenseState& s, const RegisterTarget& target, const CMatrix& u) {
    const RegisterLayout& layout = s.layout();
    validate_target(layout, target);

    std::vector<uint32_t> cards(target.size());
    std::vector<uint64_t> strides(target.size());
    std::size_t dim_u = 1;
    for (std::size_t i = 0; i < target.size(); ++i) {
        cards[i] = layout.register_cardinality(target[i]);
        strides[i] = s.stride(target[i]);
        dim_u *= cards[i];
    }
    if (u.size() != dim_u) throw std::invalid_argument("operator: dimension mismatch with target registers");
    if (!u.is_unitary(kUnitaryTol)) throw std::invalid_argument("operator: matrix is not unitary");

    std::vector<uint64_t> offsets(dim_u, 0);
    for (std::size_t v = 0; v < dim_u; ++v) {
        std::size_t rest = v;
        for (std::size_t i = target.size(); i-- > 0;) {
            offsets[v] += (rest % cards[i]) * strides[i];
            rest /= cards[i];
        }
    }

    DenseState out(layout);
    std::vector<cplx> block(dim_u);
    const uint64_t dim = s.dimension();
    for (uint64_t base = 0; base < dim; ++base) {
        bool is_base = true;
        for (std::size_t i = 0; i < target.size(); ++i)
            if ((base / strides[i]) % cards[i] != 0) {
                is_base = false;
                break;
            }
        if (!is_base) continue;
        for (std::size_t v = 0; v < dim_u; ++v) block[v] = s.data()[base + offsets[v]];
        for (std::size_t r = 0; r < dim_u; ++r) {
            cplx acc = 0.0;
            for (std::size_t c = 0; c < dim_u; ++c) acc += u(r, c) * block[c];
            out.data()[base + offsets[r]] = acc;
        }
    }
    return out;
}

DenseState project(const DenseState& s, const std::function<bool(const BasisComponent&)>& keep) {
    DenseState out(s.layout());
    for (uint64_t i = 0; i < s.dimension(); ++i) {
        if (s.data()[i] == 0.0) continue;
        if (keep(s.decode(i))) out.data()[i] = s.data()[i];
    }
    return out;
}

}  // namespace recq
