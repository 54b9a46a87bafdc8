// Wall-clock comparison of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "qmetro/classical_rm.hpp"
#include "qmetro/constructors.hpp"
#include "qmetro/metrology.hpp"
#include "qmetro/parallel.hpp"

using namespace qmetro;

namespace {

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, agree ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) set_thread_count(std::atoi(argv[1]));
    const int reps = 3;
    std::printf("threads: %d\n", thread_count());
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

    struct Case {
        const char* name;
        StabilizerCode code;
        std::size_t k;
    };
    const Case cases[] = {
        {"census shor n=300 k=3", shor(100), 3},
        {"census qrm1 n=127 k=3", qrm1(7), 3},
        {"census thin surface n=198 k=3", thin_surface(40), 3},
        {"census generalized shor n=40 k=5", generalized_shor(5, 8), 5},
    };
    for (const auto& c : cases) {
        LogicalCensus s, p;
        const double ts = best_of(reps, [&] { s = census_serial(c.code, c.k); });
        const double tp = best_of(reps, [&] { p = census(c.code, c.k); });
        row(c.name, ts, tp, s == p);
    }

    const auto rm = rm_generator(2, 6);
    WeightEnumerator ws, wp;
    const double ts = best_of(reps, [&] { ws = weight_enumerator_reference(rm); });
    const double tp = best_of(reps, [&] { wp = weight_enumerator(rm); });
    row("weight enumerator RM(2,6) dim 22", ts, tp, ws == wp);
    return 0;
}
