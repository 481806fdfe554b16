#pragma once

#include "recq/state.hpp"

#include <vector>

namespace recq {

/// Full state vector over the mixed-radix encoding of (x, p, w, f) in
/// canonical order. Only available while the total dimension stays under
/// RegisterLayout::kDenseLimit; used as the bit-exact cross-check for the
/// sparse representation and for the standard-model runs.
class DenseState {
public:
    explicit DenseState(RegisterLayout layout);

    static DenseState from_sparse(const QueryState& s);
    QueryState to_sparse(double eps = kPruneEps) const;

    const RegisterLayout& layout() const { return layout_; }
    uint64_t dimension() const { return v_.size(); }

    std::vector<cplx>& data() { return v_; }
    const std::vector<cplx>& data() const { return v_; }

    uint64_t stride(const RegisterRef& ref) const;
    uint64_t encode(const BasisComponent& c) const;
    BasisComponent decode(uint64_t index) const;

private:
    RegisterLayout layout_;
    std::vector<cplx> v_;
    std::vector<uint64_t> w_strides_;
    std::vector<uint64_t> f_strides_;
    uint64_t p_stride_ = 1;
    uint64_t q_stride_ = 1;
    uint64_t f_block_ = 1;
};

double norm(const DenseState& s);
double distance(const DenseState& a, const DenseState& b);
/// Largest per-amplitude difference between the two representations.
double max_amplitude_diff(const DenseState& dense, const QueryState& sparse);

DenseState apply_unitary(const DenseState& s, const RegisterTarget& target, const CMatrix& u);
DenseState project(const DenseState& s, const std::function<bool(const BasisComponent&)>& keep);

}  // namespace recq
