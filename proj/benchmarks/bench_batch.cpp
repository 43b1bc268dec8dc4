// Timing comparison of the serial and OpenMP batch checkers on identical
// seeded workloads. Not part of the test suite; build target only.

#include <cstdio>

#include <omp.h>

#include "resknap/batch.hpp"

using namespace resknap;

namespace {

double time_batch(bool parallel, const BatchConfig& batch, const Rat& alpha, const Rat& c) {
    double t0 = omp_get_wtime();
    BatchResult result = check_value_batch(batch, alpha, c, parallel);
    double dt = omp_get_wtime() - t0;
    if (!result.pass()) std::printf("  (unexpected violations: %zu)\n", result.violations);
    return dt;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t count = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 2000;
    BatchConfig batch{42, count, 50};
    Rat alpha(1, 10);
    Rat c(1183, 500);  // roughly the optimal threshold at alpha = 0.1

    std::printf("batch: %zu instances, n <= %zu, %d thread(s) available\n", batch.count,
                batch.n_max, omp_get_max_threads());
    double serial = time_batch(false, batch, alpha, c);
    std::printf("serial:   %8.3f s\n", serial);
    double parallel = time_batch(true, batch, alpha, c);
    std::printf("parallel: %8.3f s  (speedup %.2fx)\n", parallel, serial / parallel);

    // The parallel path must agree with the serial reference exactly.
    BatchResult a = check_value_batch(batch, alpha, c, false);
    BatchResult b = check_value_batch(batch, alpha, c, true);
    bool same = a.violations == b.violations && a.worst_strict.infinite == b.worst_strict.infinite &&
                a.worst_strict.value == b.worst_strict.value;
    std::printf("serial/parallel results %s\n", same ? "identical" : "DIFFER");
    return same ? 0 : 1;
}
