#include "braidforge/convolutions.hpp"

namespace braidforge {

namespace {

void require_square_equal(const std::vector<CMatrix>& g, const char* who) {
    if (g.empty()) throw validation_error(std::string(who) + ": empty generator list");
    const index_t N = g[0].rows();
    for (const auto& m : g)
        if (!m.square() || m.rows() != N)
            throw validation_error(std::string(who) + ": generators must be square of equal size");
}

} // namespace

CMatrix lm_sigma(const SemidirectRep& rep, int i) {
    if (i < 1 || i > rep.n - 1) throw validation_error("lm_sigma: braid index out of range");
    auto it = rep.s.find(i);
    if (it == rep.s.end()) throw validation_error("lm_sigma: sigma index not in the s-domain");
    const index_t N = rep.N;
    const int n = rep.n;
    const CMatrix& si = it->second;
    const CMatrix& gi = rep.g[static_cast<size_t>(i - 1)];
    const CMatrix& gi1 = rep.g[static_cast<size_t>(i)];
    const CMatrix I = CMatrix::identity(N);

    // D = diag(I_{N(i-1)}, R_i, I_{N(n-i-1)}); the result is s_i^{oplus n} D,
    // assembled block row by block row.
    CMatrix out(N * n, N * n);
    for (int b = 1; b <= n; ++b) {
        if (b == i) {
            out.set_block((b - 1) * N, b * N, si * gi);
        } else if (b == i + 1) {
            out.set_block((b - 1) * N, (b - 2) * N, si);
            out.set_block((b - 1) * N, (b - 1) * N, si * (I - gi1));
        } else {
            out.set_block((b - 1) * N, (b - 1) * N, si);
        }
    }
    return out;
}

CMatrix dr_matrix(const std::vector<CMatrix>& g, cplx lambda, int j) {
    require_square_equal(g, "dr_matrix");
    if (lambda == cplx(0.0, 0.0)) throw validation_error("dr_matrix: lambda must be nonzero");
    const int n = static_cast<int>(g.size());
    if (j < 1 || j > n) throw validation_error("dr_matrix: row index out of range");
    const index_t N = g[0].rows();
    const CMatrix I = CMatrix::identity(N);

    CMatrix out = CMatrix::identity(N * n);
    for (int col = 1; col <= n; ++col) {
        const CMatrix& gc = g[static_cast<size_t>(col - 1)];
        CMatrix blk = col < j ? lambda * (gc - I) : (col == j ? lambda * gc : gc - I);
        out.set_block((j - 1) * N, (col - 1) * N, blk);
    }
    return out;
}

namespace {

SemidirectRep lm_assemble(const SemidirectRep& base, cplx lambda) {
    SemidirectRep out;
    out.n = base.n;
    out.N = base.N * base.n;
    out.action_exponent = 1;
    out.g.reserve(static_cast<size_t>(base.n));
    for (int j = 1; j <= base.n; ++j) out.g.push_back(dr_matrix(base.g, lambda, j));
    for (const auto& [i, si] : base.s) out.s[i] = lm_sigma(base, i);
    if (base.H) out.H = build_h_tilde(base.g, *base.H, lambda, /*strict=*/false);
    return out;
}

} // namespace

SemidirectRep twisted_lm(const SemidirectRep& rep, const ConvolutionParams& params) {
    params.validate();
    if (params.k != 1)
        throw validation_error("twisted_lm: k must be 1 (use wada_lm for k != 1)");
    if (rep.n < 2) throw validation_error("twisted_lm: need n >= 2");
    return lm_assemble(rep, params.lambda);
}

SemidirectRep wada_lm(const SemidirectRep& rep, const ConvolutionParams& params) {
    params.validate();
    if (rep.n < 2) throw validation_error("wada_lm: need n >= 2");
    if (params.k == 1) return lm_assemble(rep, params.lambda);
    // Substituting x -> x^k: the construction only sees the k-th power
    // images, on which the Wada action is the Artin action.
    SemidirectRep powered = rep;
    for (auto& m : powered.g) m = matrix_power(m, params.k);
    SemidirectRep out = lm_assemble(powered, params.lambda);
    out.action_exponent = params.k;
    return out;
}

CMatrix haraoka_n0j(const std::vector<CMatrix>& M0, cplx lambda, int j, PivotReading pivot) {
    if (pivot == PivotReading::Standard || j == 1) return dr_matrix(M0, lambda, j);
    // Shifted reading, as displayed in the convolution table: pivot
    // lambda M_{0,j-1} sits at block column j-1.
    require_square_equal(M0, "haraoka_n0j");
    if (lambda == cplx(0.0, 0.0)) throw validation_error("haraoka_n0j: lambda must be nonzero");
    const int n = static_cast<int>(M0.size());
    if (j < 1 || j > n) throw validation_error("haraoka_n0j: row index out of range");
    const index_t N = M0[0].rows();
    const CMatrix I = CMatrix::identity(N);
    CMatrix out = CMatrix::identity(N * n);
    for (int col = 1; col <= n; ++col) {
        const CMatrix& mc = M0[static_cast<size_t>(col - 1)];
        CMatrix blk = col < j - 1 ? lambda * (mc - I) : (col == j - 1 ? lambda * mc : mc - I);
        out.set_block((j - 1) * N, (col - 1) * N, blk);
    }
    return out;
}

CMatrix haraoka_nij(const PureBraidAntiRep& rep, cplx lambda, int i, int j, XkReading xk) {
    if (lambda == cplx(0.0, 0.0)) throw validation_error("haraoka_nij: lambda must be nonzero");
    if (!(1 <= i && i < j && j <= rep.n))
        throw validation_error("haraoka_nij: need 1 <= i < j <= n");
    const index_t N = rep.N;
    const int n = rep.n;
    const CMatrix& Mij = rep.at(i, j);
    const CMatrix& M0i = rep.at(0, i);
    const CMatrix& M0j = rep.at(0, j);
    const CMatrix I = CMatrix::identity(N);
    const CMatrix M0i_inv = inverse(M0i);

    CMatrix out(N * n, N * n);
    for (int b = 1; b <= n; ++b)
        if (b < i || b > j) out.set_block((b - 1) * N, (b - 1) * N, Mij);

    out.set_block((i - 1) * N, (i - 1) * N, M0j * Mij);
    out.set_block((i - 1) * N, (j - 1) * N, M0j * Mij * (I - M0j));
    out.set_block((j - 1) * N, (i - 1) * N, Mij * (I - M0i));
    out.set_block((j - 1) * N, (j - 1) * N, Mij - Mij * M0j + M0j * Mij * M0i);

    if (j - i >= 2) {
        CMatrix mid, xfac;
        switch (xk) {
        case XkReading::Corrected:
            mid = M0i_inv * Mij * M0i;
            xfac = M0j * Mij - mid;
            break;
        case XkReading::PaperM0i:
            mid = M0i_inv * Mij * M0j;
            xfac = M0j * Mij - M0i_inv * Mij * M0j;
            break;
        case XkReading::LiteralM1i: {
            mid = M0i_inv * Mij * M0j;
            const CMatrix& m1i = i >= 2 ? rep.at(1, i) : M0i;
            xfac = M0j * Mij - inverse(m1i) * Mij * M0j;
            break;
        }
        }
        for (int kk = i + 1; kk <= j - 1; ++kk) {
            const CMatrix& M0k = rep.at(0, kk);
            out.set_block((kk - 1) * N, (kk - 1) * N, mid);
            out.set_block((i - 1) * N, (kk - 1) * N, xfac * (I - M0k));
            out.set_block((j - 1) * N, (kk - 1) * N, Mij * (I - M0i) * (I - M0k));
        }
    }
    return out;
}

PureBraidAntiRep haraoka_convolution(const PureBraidAntiRep& rep, cplx lambda, XkReading xk,
                                     PivotReading pivot) {
    if (lambda == cplx(0.0, 0.0))
        throw validation_error("haraoka_convolution: lambda must be nonzero");
    std::vector<CMatrix> M0;
    M0.reserve(static_cast<size_t>(rep.n));
    for (int j = 1; j <= rep.n; ++j) M0.push_back(rep.at(0, j));

    PureBraidAntiRep out;
    out.n = rep.n;
    out.N = rep.N * rep.n;
    out.anti = rep.anti;
    for (int j = 1; j <= rep.n; ++j) out.M[{0, j}] = haraoka_n0j(M0, lambda, j, pivot);
    for (int i = 1; i <= rep.n; ++i)
        for (int j = i + 1; j <= rep.n; ++j) out.M[{i, j}] = haraoka_nij(rep, lambda, i, j, xk);
    return out;
}

CMatrix additive_b0j(const std::vector<CMatrix>& A0, cplx lambda, int j) {
    require_square_equal(A0, "additive_b0j");
    const int n = static_cast<int>(A0.size());
    if (j < 1 || j > n) throw validation_error("additive_b0j: row index out of range");
    const index_t N = A0[0].rows();
    CMatrix out(N * n, N * n);
    for (int col = 1; col <= n; ++col) {
        CMatrix blk = A0[static_cast<size_t>(col - 1)];
        if (col == j) blk += lambda * CMatrix::identity(N);
        out.set_block((j - 1) * N, (col - 1) * N, blk);
    }
    return out;
}

CMatrix basis_matrix_p(const std::vector<CMatrix>& M0, cplx lambda, bool* singular,
                       const Tolerances& tol) {
    require_square_equal(M0, "basis_matrix_p");
    const int n = static_cast<int>(M0.size());
    const index_t N = M0[0].rows();
    const CMatrix I = CMatrix::identity(N);
    CMatrix out(N * n, N * n);
    bool sing = lambda == cplx(1.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        const CMatrix colblk = (cplx(1.0, 0.0) - lambda) * (I - M0[static_cast<size_t>(k - 1)]);
        if (!sing && numerical_rank(colblk, tol) < N) sing = true;
        for (int m = 1; m <= k; ++m) out.set_block((m - 1) * N, (k - 1) * N, colblk);
    }
    if (singular) *singular = sing;
    return out;
}

CMatrix basis_change(const CMatrix& Nmat, const CMatrix& P) {
    if (!P.square() || P.rows() != Nmat.rows() || !Nmat.square())
        throw validation_error("basis_change: shape mismatch");
    // X = P N P^{-1} via a solve on the right factor: X = (P N) P^{-1}.
    CMatrix PN = P * Nmat;
    // Solve X P = PN  <=>  P^T X^T = PN^T.
    return solve(P.transpose(), PN.transpose()).transpose();
}

} // namespace braidforge
