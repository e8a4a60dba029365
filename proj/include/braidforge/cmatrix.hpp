#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "braidforge/errors.hpp"

namespace braidforge {

using cplx = std::complex<double>;
using index_t = long;

// Dense complex matrix, row-major. The universal numeric carrier:
// every representation matrix, form, and basis in the library is one
// of these. Empty (0-row / 0-column) matrices are legal so that
// trivial subspaces and 0-dimensional quotients can be represented.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(index_t rows, index_t cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw validation_error("CMatrix: negative dimension");
    }
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix zero(index_t rows, index_t cols) { return CMatrix(rows, cols); }
    static CMatrix identity(index_t n);

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(index_t r, index_t c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const cplx& operator()(index_t r, index_t c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix block(index_t r0, index_t c0, index_t nrows, index_t ncols) const;
    void set_block(index_t r0, index_t c0, const CMatrix& b);

    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;
    cplx trace() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx scalar);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx scalar) { return a *= scalar; }
    friend CMatrix operator*(cplx scalar, CMatrix a) { return a *= scalar; }
    friend CMatrix operator-(const CMatrix& a) { return a * cplx(-1.0, 0.0); }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    index_t rows_, cols_;
    std::vector<cplx> data_;
};

// Relative Frobenius distance ||a-b||_F / max(||b||_F, eps); the residual
// measure used by all relation checks.
double rel_residual(const CMatrix& a, const CMatrix& b);

} // namespace braidforge
