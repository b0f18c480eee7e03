#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mbh/hankel.hpp"
#include "mbh/matrix.hpp"

using namespace mbh;

namespace {

template <class F>
double best_ms(F&& f, int reps) {
    double best = 1e18;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    long nint = 40;
    long npoly = 24;
    if (argc > 1) nint = std::atol(argv[1]);
    if (argc > 2) npoly = std::atol(argv[2]);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("fraction-free elimination, serial kernel vs row-parallel kernel (%d threads)\n",
                threads);
    std::printf("%-22s %6s %12s %12s %9s %6s\n", "matrix", "size", "serial ms", "parallel ms",
                "speedup", "same");

    bool all_same = true;

    {
        auto seq = int_seq_table(0, 2 * nint);
        Mat<Int> m = hankel_matrix(seq, 0, nint);
        Int a, b;
        double ts = best_ms([&] { a = det_bareiss_serial(m); }, 3);
        double tp = best_ms([&] { b = det_bareiss(m); }, 3);
        bool same = (a == b);
        all_same = all_same && same;
        std::printf("%-22s %6ld %12.2f %12.2f %8.2fx %6s\n", "integer, middle binom", nint, ts, tp,
                    ts / tp, same ? "yes" : "NO");
    }

    {
        auto seq = poly_seq_table(Family::B, 2 * npoly);
        Mat<TPoly> m = hankel_matrix(seq, 0, npoly);
        TPoly a, b;
        double ts = best_ms([&] { a = det_bareiss_serial(m); }, 3);
        double tp = best_ms([&] { b = det_bareiss(m); }, 3);
        bool same = (a == b);
        all_same = all_same && same;
        std::printf("%-22s %6ld %12.2f %12.2f %8.2fx %6s\n", "polynomial, family B", npoly, ts, tp,
                    ts / tp, same ? "yes" : "NO");
    }

    if (threads == 1)
        std::printf("note: one hardware thread; the parallel kernel should match the serial one "
                    "to within scheduling noise\n");
    return all_same ? 0 : 1;
}
