#pragma once

#include "braidforge/cmatrix.hpp"

// Dense kernels behind CMatrix arithmetic. Each kernel exists twice:
// a serial reference and an OpenMP version parallelized over output
// rows. The parallel version keeps the per-element reduction order of
// the serial one, so the two produce bit-identical results; tests and
// the bench_kernels tool compare them.
namespace braidforge::kernels {

// c (m x n) = a (m x k) * b (k x n), row-major buffers.
void matmul_serial(const cplx* a, const cplx* b, cplx* c, index_t m, index_t k, index_t n);
void matmul_parallel(const cplx* a, const cplx* b, cplx* c, index_t m, index_t k, index_t n);

// Dispatch: parallel above a flop threshold, serial below.
void matmul(const cplx* a, const cplx* b, cplx* c, index_t m, index_t k, index_t n);

// out (n x n) = x^dagger (n x m) * h (m x m) * x (m x n).
void sandwich_serial(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n);
void sandwich_parallel(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n);
void sandwich(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n);

// Flop count above which the parallel path is taken.
inline constexpr long parallel_flop_threshold = 1L << 18;

} // namespace braidforge::kernels
