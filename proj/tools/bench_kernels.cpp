// Times the serial reference kernels against the OpenMP versions and
// prints throughput and speedup per size.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braidforge/kernels.hpp"
#include "braidforge/reps.hpp"

using namespace braidforge;

namespace {

double time_of(void (*fn)(const cplx*, const cplx*, cplx*, index_t, index_t, index_t),
               const CMatrix& a, const CMatrix& b, CMatrix& c, int reps) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        fn(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
        const auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%8s %14s %14s %9s\n", "dim", "serial GF/s", "parallel GF/s", "speedup");
    Rng rng(2024);
    for (index_t dim : {128, 256, 384, 512}) {
        CMatrix a(dim, dim), b(dim, dim), c(dim, dim);
        for (index_t i = 0; i < dim; ++i)
            for (index_t j = 0; j < dim; ++j) {
                a(i, j) = rng.gaussian();
                b(i, j) = rng.gaussian();
            }
        const int reps = dim <= 256 ? 5 : 3;
        const double ts = time_of(kernels::matmul_serial, a, b, c, reps);
        const double tp = time_of(kernels::matmul_parallel, a, b, c, reps);
        // complex multiply-add: 8 real flops per term
        const double flops = 8.0 * static_cast<double>(dim) * dim * dim;
        std::printf("%8ld %14.2f %14.2f %8.2fx\n", static_cast<long>(dim), flops / ts / 1e9,
                    flops / tp / 1e9, ts / tp);
    }
    return 0;
}
