#include "recq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recq {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix product: size mismatch");
    CMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t k = 0; k < n_; ++k) {
            const cplx v = (*this)(r, k);
            if (v == 0.0) continue;
            for (std::size_t c = 0; c < n_; ++c) m(r, c) += v * rhs(k, c);
        }
    }
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix diff: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::abs(a_[i] - rhs.a_[i]));
    return d;
}

double CMatrix::unitarity_defect() const {
    double d = 0.0;
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n_; ++k) s += std::conj((*this)(k, r)) * (*this)(k, c);
            if (r == c) s -= 1.0;
            d = std::max(d, std::abs(s));
        }
    }
    return d;
}

}  // namespace recq
