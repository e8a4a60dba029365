#include "braidforge/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace braidforge {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (index_t i = 0; i < m.rows(); ++i)
        for (index_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

CMatrix from_eigen(const Eigen::MatrixXcd& e) {
    CMatrix m(e.rows(), e.cols());
    for (index_t i = 0; i < e.rows(); ++i)
        for (index_t j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

void require_finite(const CMatrix& m, const char* who) {
    if (!m.is_finite()) throw validation_error(std::string(who) + ": non-finite entries");
}

// Rank cut: sigma counts as nonzero iff sigma > rank_rel * sigma_max * max(dims).
index_t svd_rank(const Eigen::VectorXd& sv, index_t rows, index_t cols, const Tolerances& tol) {
    if (sv.size() == 0) return 0;
    const double smax = sv(0);
    if (smax == 0.0) return 0;
    const double thr = tol.rank_rel * smax * static_cast<double>(std::max(rows, cols));
    index_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > thr) ++r;
    return r;
}

} // namespace

SubspaceBasis kernel_basis(const CMatrix& m, const Tolerances& tol) {
    require_finite(m, "kernel_basis");
    tol.validate();
    if (m.cols() == 0) return SubspaceBasis::trivial(0);
    if (m.rows() == 0) return SubspaceBasis::full(m.cols());
    Eigen::MatrixXcd e = to_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
    const index_t r = svd_rank(svd.singularValues(), m.rows(), m.cols(), tol);
    const Eigen::MatrixXcd V = svd.matrixV();
    return {m.cols(), from_eigen(V.rightCols(V.cols() - r))};
}

index_t numerical_rank(const CMatrix& m, const Tolerances& tol) {
    require_finite(m, "numerical_rank");
    if (m.empty()) return 0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    return svd_rank(svd.singularValues(), m.rows(), m.cols(), tol);
}

Inertia hermitian_inertia(const CMatrix& h, const Tolerances& tol) {
    require_finite(h, "hermitian_inertia");
    tol.validate();
    if (!h.square()) throw validation_error("hermitian_inertia: non-square input");
    if (h.rows() == 0) return {0, 0, 0};
    const double hn = h.frobenius_norm();
    if (hn > 0.0 && (h - h.adjoint()).frobenius_norm() > tol.residual_rel * hn)
        throw validation_error("hermitian_inertia: input not Hermitian within tolerance");
    Eigen::MatrixXcd e = to_eigen(h);
    e = (e + e.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double emax = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    const double tau = tol.rank_rel * emax;
    Inertia out;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > tau) ++out.p;
        else if (ev(i) < -tau) ++out.q;
        else ++out.z;
    }
    return out;
}

CMatrix congruence(const CMatrix& h, const CMatrix& x) {
    if (!h.square() || h.rows() != x.rows())
        throw validation_error("congruence: dimension mismatch");
    return x.adjoint() * h * x;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b, const Tolerances& tol) {
    if (a.ambient_dim != b.ambient_dim)
        throw validation_error("subspace_sum: ambient dimension mismatch");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    CMatrix stack(a.ambient_dim, a.dim() + b.dim());
    stack.set_block(0, 0, a.basis);
    stack.set_block(0, a.dim(), b.basis);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(stack), Eigen::ComputeFullU);
    const index_t r = svd_rank(svd.singularValues(), stack.rows(), stack.cols(), tol);
    return {a.ambient_dim, from_eigen(svd.matrixU().leftCols(r))};
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& w, const Tolerances& tol) {
    if (w.dim() == 0) return SubspaceBasis::full(w.ambient_dim);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_eigen(w.basis), Eigen::ComputeFullU);
    const index_t r = svd_rank(svd.singularValues(), w.basis.rows(), w.basis.cols(), tol);
    const Eigen::MatrixXcd U = svd.matrixU();
    return {w.ambient_dim, from_eigen(U.rightCols(U.cols() - r))};
}

double max_principal_angle(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.dim() == 0 && b.dim() == 0) return 0.0;
    if (a.dim() == 0 || b.dim() == 0) return std::acos(0.0);
    const Eigen::MatrixXcd ea = to_eigen(a.basis);
    const Eigen::MatrixXcd eb = to_eigen(b.basis);
    const Eigen::MatrixXcd c = ea.adjoint() * eb;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(c);
    const Eigen::VectorXd sv = svd.singularValues();
    const double cmin = std::clamp(sv(sv.size() - 1), -1.0, 1.0);
    if (cmin < 0.7) return std::acos(cmin);
    // small angles: the cosine route bottoms out near sqrt(eps); use the
    // sine of the residual component instead.
    const Eigen::MatrixXcd resid = eb - ea * c;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd2(resid);
    const double smax = std::clamp(svd2.singularValues()(0), 0.0, 1.0);
    return std::asin(smax);
}

CMatrix inverse(const CMatrix& m) {
    if (!m.square()) throw validation_error("inverse: non-square input");
    if (m.rows() == 0) return m;
    require_finite(m, "inverse");
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(m));
    Eigen::MatrixXcd inv = lu.inverse();
    if (!inv.allFinite()) throw validation_error("inverse: singular matrix");
    return from_eigen(inv);
}

CMatrix solve(const CMatrix& a, const CMatrix& b) {
    if (!a.square() || a.rows() != b.rows()) throw validation_error("solve: shape mismatch");
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(to_eigen(a));
    Eigen::MatrixXcd x = lu.solve(to_eigen(b));
    if (!x.allFinite()) throw validation_error("solve: singular matrix");
    return from_eigen(x);
}

cplx determinant(const CMatrix& m) {
    if (!m.square()) throw validation_error("determinant: non-square input");
    if (m.rows() == 0) return cplx(1.0, 0.0);
    return to_eigen(m).determinant();
}

CMatrix matrix_power(const CMatrix& m, long e) {
    if (!m.square()) throw validation_error("matrix_power: non-square input");
    CMatrix base = e >= 0 ? m : inverse(m);
    long k = e >= 0 ? e : -e;
    CMatrix acc = CMatrix::identity(m.rows());
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    Eigen::MatrixXcd e = to_eigen(h);
    e = (e + e.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

std::pair<std::vector<double>, CMatrix> hermitian_eigensystem(const CMatrix& h) {
    Eigen::MatrixXcd e = to_eigen(h);
    e = (e + e.adjoint().eval()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return {ev, from_eigen(es.eigenvectors())};
}

std::vector<cplx> eigenvalues(const CMatrix& m) {
    if (!m.square()) throw validation_error("eigenvalues: non-square input");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), false);
    std::vector<cplx> out(m.rows());
    for (index_t i = 0; i < m.rows(); ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
    return out;
}

} // namespace braidforge
