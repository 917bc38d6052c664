// Timing harness for the Laurent-coefficient kernel: OpenMP kernel vs the
// serial reference, plus the Kronecker vs schoolbook polynomial multiply.
#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "pim/construction.hpp"

using namespace pim;

static double tic() { return omp_get_wtime(); }

int main(int argc, char** argv) {
    long n_max = argc > 1 ? std::atol(argv[1]) : 120;
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    std::printf("%-18s %12s %12s %8s\n", "laurent table", "serial [s]", "parallel [s]", "speedup");
    for (long n = n_max / 4; n <= n_max; n += n_max / 4) {
        IntegrandParams p = IntegrandParams::classic(n);
        double t0 = tic();
        LaurentTable ser = laurent_coeffs(p, false);
        double t1 = tic();
        LaurentTable par = laurent_coeffs(p, true);
        double t2 = tic();
        if (ser.a(0) != par.a(0)) {
            std::fprintf(stderr, "kernel mismatch at n=%ld\n", n);
            return 1;
        }
        std::printf("classic n=%-8ld %12.3f %12.3f %7.2fx\n", n, t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1));
    }

    std::printf("\n%-18s %12s %12s %8s\n", "poly multiply", "ref [s]", "kron [s]", "speedup");
    for (long deg : {200L, 800L, 3200L}) {
        std::vector<Int> a(deg + 1), b(deg + 1);
        for (long i = 0; i <= deg; ++i) {
            a[i] = Int(i * i + 1) << (i % 61);
            b[i] = -(Int(3 * i + 2) << (i % 53));
        }
        double t0 = tic();
        auto ref = int_poly_mul_ref(a, b);
        double t1 = tic();
        auto fast = int_poly_mul(a, b);
        double t2 = tic();
        if (ref != fast) {
            std::fprintf(stderr, "multiply mismatch at deg=%ld\n", deg);
            return 1;
        }
        std::printf("degree %-11ld %12.3f %12.3f %7.2fx\n", deg, t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1));
    }
    return 0;
}
