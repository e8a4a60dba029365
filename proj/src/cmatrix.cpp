#include "braidforge/cmatrix.hpp"

#include <cmath>
#include <limits>

#include "braidforge/kernels.hpp"

namespace braidforge {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : rows_(0), cols_(0) {
    rows_ = static_cast<index_t>(rows.size());
    cols_ = rows_ ? static_cast<index_t>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_ * cols_));
    for (const auto& r : rows) {
        if (static_cast<index_t>(r.size()) != cols_)
            throw validation_error("CMatrix: ragged initializer");
        for (const auto& v : r) data_.push_back(v);
    }
}

CMatrix CMatrix::identity(index_t n) {
    CMatrix m(n, n);
    for (index_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (index_t i = 0; i < rows_; ++i)
        for (index_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (index_t i = 0; i < rows_; ++i)
        for (index_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix CMatrix::block(index_t r0, index_t c0, index_t nrows, index_t ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw validation_error("CMatrix::block: out of range");
    CMatrix out(nrows, ncols);
    for (index_t i = 0; i < nrows; ++i)
        for (index_t j = 0; j < ncols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void CMatrix::set_block(index_t r0, index_t c0, const CMatrix& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw validation_error("CMatrix::set_block: out of range");
    for (index_t i = 0; i < b.rows(); ++i)
        for (index_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::is_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

cplx CMatrix::trace() const {
    if (!square()) throw validation_error("CMatrix::trace: non-square");
    cplx t(0.0, 0.0);
    for (index_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("CMatrix: shape mismatch in +");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("CMatrix: shape mismatch in -");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw validation_error("CMatrix: shape mismatch in *");
    CMatrix c(a.rows(), b.cols());
    if (!c.empty() && a.cols() > 0)
        kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

double rel_residual(const CMatrix& a, const CMatrix& b) {
    const double den = std::max(b.frobenius_norm(), std::numeric_limits<double>::min());
    return (a - b).frobenius_norm() / den;
}

} // namespace braidforge
