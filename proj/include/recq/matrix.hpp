#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace recq {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for register-local
/// operators (a few dozen rows at most), so no external linear algebra
/// backend is involved.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

    static CMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix& rhs) const;

    double max_abs_diff(const CMatrix& rhs) const;

    /// max |(U†U - I)_{rc}|
    double unitarity_defect() const;
    bool is_unitary(double tol) const { return unitarity_defect() <= tol; }

    bool operator==(const CMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

}  // namespace recq
