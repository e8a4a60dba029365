#include "braidforge/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidforge::kernels {

namespace {

// One output row of a matmul; shared by the serial and parallel paths
// so their floating-point reduction order is identical.
inline void matmul_row(const cplx* a, const cplx* b, cplx* c, index_t k, index_t n, index_t i) {
    cplx* crow = c + i * n;
    for (index_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    const cplx* arow = a + i * k;
    for (index_t l = 0; l < k; ++l) {
        const cplx av = arow[l];
        if (av == cplx(0.0, 0.0)) continue;
        const cplx* brow = b + l * n;
        for (index_t j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
}

} // namespace

void matmul_serial(const cplx* a, const cplx* b, cplx* c, index_t m, index_t k, index_t n) {
    for (index_t i = 0; i < m; ++i) matmul_row(a, b, c, k, n, i);
}

void matmul_parallel(const cplx* a, const cplx* b, cplx* c, index_t m, index_t k, index_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (index_t i = 0; i < m; ++i) matmul_row(a, b, c, k, n, i);
}

void matmul(const cplx* a, const cplx* b, cplx* c, index_t m, index_t k, index_t n) {
    if (m * k * n >= parallel_flop_threshold)
        matmul_parallel(a, b, c, m, k, n);
    else
        matmul_serial(a, b, c, m, k, n);
}

namespace {

// Row i of out = (x^dag h) x without forming the intermediate:
// out(i,j) = sum_l conj(x(l,i)) * (h x)(l,j); we accumulate t = h x row-wise.
inline void sandwich_row(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n, index_t i) {
    cplx* orow = out + i * n;
    for (index_t j = 0; j < n; ++j) orow[j] = cplx(0.0, 0.0);
    for (index_t l = 0; l < m; ++l) {
        // s = (x^dag h)(i, l) = sum_r conj(x(r,i)) h(r,l)
        cplx s(0.0, 0.0);
        for (index_t r = 0; r < m; ++r) s += std::conj(x[r * n + i]) * h[r * m + l];
        const cplx* xrow = x + l * n;
        for (index_t j = 0; j < n; ++j) orow[j] += s * xrow[j];
    }
}

} // namespace

void sandwich_serial(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n) {
    for (index_t i = 0; i < n; ++i) sandwich_row(h, x, out, m, n, i);
}

void sandwich_parallel(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (index_t i = 0; i < n; ++i) sandwich_row(h, x, out, m, n, i);
}

void sandwich(const cplx* h, const cplx* x, cplx* out, index_t m, index_t n) {
    if (2 * m * m * n >= parallel_flop_threshold)
        sandwich_parallel(h, x, out, m, n);
    else
        sandwich_serial(h, x, out, m, n);
}

} // namespace braidforge::kernels
