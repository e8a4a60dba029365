#pragma once

#include <tuple>
#include <vector>

#include "braidforge/cmatrix.hpp"
#include "braidforge/tolerances.hpp"

namespace braidforge {

// Orthonormal (possibly empty) basis of a subspace of C^ambient_dim,
// stored as the columns of `basis`.
struct SubspaceBasis {
    index_t ambient_dim = 0;
    CMatrix basis; // ambient_dim x dim, basis^dag basis = I

    index_t dim() const { return basis.cols(); }
    static SubspaceBasis full(index_t ambient) { return {ambient, CMatrix::identity(ambient)}; }
    static SubspaceBasis trivial(index_t ambient) { return {ambient, CMatrix(ambient, 0)}; }
};

struct Inertia {
    index_t p = 0; // eigenvalues > tau
    index_t q = 0; // eigenvalues < -tau
    index_t z = 0; // the rest

    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Orthonormal basis of the numerical null space of m. A singular value
// sigma counts as zero iff sigma <= rank_rel * sigma_max * max(rows, cols).
SubspaceBasis kernel_basis(const CMatrix& m, const Tolerances& tol = {});

// Numerical rank under the same threshold.
index_t numerical_rank(const CMatrix& m, const Tolerances& tol = {});

// Inertia (p, q, z) of a Hermitian matrix via eigenvalues, with zero
// threshold tau = rank_rel * max|eigenvalue|. Rejects inputs that are
// not Hermitian within residual_rel (Frobenius relative).
Inertia hermitian_inertia(const CMatrix& h, const Tolerances& tol = {});

// x^dag h x.
CMatrix congruence(const CMatrix& h, const CMatrix& x);

// Orthonormal basis of span(a) + span(b).
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b,
                           const Tolerances& tol = {});

// Orthonormal Q with Q^dag w = 0 and dim(Q) + dim(w) = ambient_dim.
SubspaceBasis orthogonal_complement(const SubspaceBasis& w, const Tolerances& tol = {});

// Principal angles between two subspaces given by orthonormal bases;
// returns the largest angle (0 when both are zero-dimensional, pi/2
// sentinel when exactly one is).
double max_principal_angle(const SubspaceBasis& a, const SubspaceBasis& b);

// Dense solves via LU. Throw validation_error on singular input.
CMatrix inverse(const CMatrix& m);
CMatrix solve(const CMatrix& a, const CMatrix& b); // a x = b
cplx determinant(const CMatrix& m);

// m^e for integer e (negative uses the inverse).
CMatrix matrix_power(const CMatrix& m, long e);

// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

// Hermitian eigendecomposition: returns (eigenvalues ascending, unitary U
// with columns the eigenvectors).
std::pair<std::vector<double>, CMatrix> hermitian_eigensystem(const CMatrix& h);

// Eigenvalues of a general square matrix (unsorted).
std::vector<cplx> eigenvalues(const CMatrix& m);

} // namespace braidforge
