#pragma once

#include "braidforge/reps.hpp"

namespace braidforge {

struct ConvolutionParams {
    cplx lambda{1.0, 0.0};
    long k = 1;

    void validate() const {
        if (lambda == cplx(0.0, 0.0)) throw validation_error("ConvolutionParams: lambda must be nonzero");
        if (k == 0) throw validation_error("ConvolutionParams: k must be nonzero");
    }
};

// Long-Moody braid image: s_i^{oplus n} * diag(I, R_i, I) with
// R_i = [[0, g_i], [I, I - g_{i+1}]].
CMatrix lm_sigma(const SemidirectRep& rep, int i);

// Dettweiler-Reiter convolution matrix: identity except block row j,
//   (lambda(g_1 - 1), ..., lambda(g_{j-1} - 1), lambda g_j, g_{j+1} - 1, ..., g_n - 1).
CMatrix dr_matrix(const std::vector<CMatrix>& g, cplx lambda, int j);

// Twisted Long-Moody construction (Artin action): g'_j = dr_matrix(g, lambda, j),
// s'_i = lm_sigma(rep, i). Carries H forward as the invariant form
// build_h_tilde(g, H, lambda) when the input has one.
SemidirectRep twisted_lm(const SemidirectRep& rep, const ConvolutionParams& params);

// Wada generalization: every g_m enters as g_m^k in both the DR rows and
// R_i; the scalar twist stays lambda. Equivalent to the twisted LM applied
// to the k-th power generator images. k = 1 reproduces twisted_lm exactly.
SemidirectRep wada_lm(const SemidirectRep& rep, const ConvolutionParams& params);

// Readings of the ambiguous spots in the convolution tables. Adjudicated
// numerically by correspond::adjudicate_readings; the defaults are the
// unique combination that satisfies the correspondence theorem.
enum class XkReading {
    Corrected,   // mid diagonal M_{0i}^{-1} M_{ij} M_{0i}; X_k from it
    PaperM0i,    // displayed mid M_{0i}^{-1} M_{ij} M_{0j}, X with M_{0i}^{-1}
    LiteralM1i,  // displayed mid, X with the literal M_{1i}^{-1}
};
enum class PivotReading {
    Standard,    // lambda M_{0j} at block column j (matches dr_matrix)
    Shifted,     // lambda M_{0,j-1} at block column j-1 (as displayed; j >= 2)
};

// Haraoka N_{0j}: identical to dr_matrix under the Standard pivot reading.
CMatrix haraoka_n0j(const std::vector<CMatrix>& M0, cplx lambda, int j,
                    PivotReading pivot = PivotReading::Standard);

// Haraoka N_{ij}, i >= 1: M_{ij}^{oplus(i-1)} (+) N'_{ij} (+) M_{ij}^{oplus(n-j)}
// with corner blocks M_{0j}M_{ij}, M_{0j}M_{ij}(1-M_{0j}), M_{ij}(1-M_{0i}),
// M[i,j,0] = M_{ij} - M_{ij}M_{0j} + M_{0j}M_{ij}M_{0i}, middle diagonal and
// row/column fillers X_k, Y_k = M_{ij}(1-M_{0i})(1-M_{0k}) per the reading.
CMatrix haraoka_nij(const PureBraidAntiRep& rep, cplx lambda, int i, int j,
                    XkReading xk = XkReading::Corrected);

// The whole convolution: sigma~_{0j} -> N_{0j}, sigma~_{ij} -> N_{ij}.
PureBraidAntiRep haraoka_convolution(const PureBraidAntiRep& rep, cplx lambda,
                                     XkReading xk = XkReading::Corrected,
                                     PivotReading pivot = PivotReading::Standard);

// Additive convolution matrix: zero except block row j,
//   (A_{01}, ..., A_{0j} + lambda I, ..., A_{0n}).
CMatrix additive_b0j(const std::vector<CMatrix>& A0, cplx lambda, int j);

// Block upper-triangular twisted-cycle basis matrix with
// P_{mk} = (1 - lambda)(1 - M_{0k}) for m <= k. Singularity (lambda = 1 or
// some 1 - M_{0k} singular) is reported through the flag, not thrown.
CMatrix basis_matrix_p(const std::vector<CMatrix>& M0, cplx lambda,
                       bool* singular = nullptr, const Tolerances& tol = {});

// X = P N P^{-1}, so that X P = P N.
CMatrix basis_change(const CMatrix& Nmat, const CMatrix& P);

} // namespace braidforge
