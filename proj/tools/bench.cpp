// Benchmark comparing the OpenMP kernels against their serial references:
// diagram-algebra products, psi-image accumulation, and the LP conversion's
// trace-evaluation loop.

#include <chrono>
#include <cstdio>
#include <random>

#include "wbsdp/apps.hpp"
#include "wbsdp/parallel.hpp"

using namespace wbsdp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

AlgebraElement denseRandom(int p, int q, int delta, unsigned seed) {
    std::mt19937 rng(seed);
    auto basis = enumerateDiagrams(p, q);
    AlgebraElement e(p, q, delta);
    std::uniform_int_distribution<int> num(-9, 9);
    for (const auto& dg : basis) e.addTerm(dg, num(rng));
    return e;
}

template <typename F>
double timeIt(F&& f, int reps) {
    auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) f();
    return seconds(t0, Clock::now()) / reps;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", hardwareThreads());

    {
        AlgebraElement a = denseRandom(3, 2, 3, 1);
        AlgebraElement b = denseRandom(3, 2, 3, 2);
        double serial = timeIt([&] { (void)mulSerial(a, b); }, 5);
        parallelEnabled() = true;
        double parallel = timeIt([&] { (void)mul(a, b); }, 5);
        if (!(mul(a, b) == mulSerial(a, b))) {
            std::printf("mul kernels disagree!\n");
            return 1;
        }
        std::printf("algebra product (120x120 terms, B_{3,2})\n");
        std::printf("  serial   %.4f s\n  openmp   %.4f s  (x%.2f)\n\n", serial, parallel,
                    serial / parallel);
    }

    {
        AlgebraElement e = denseRandom(2, 2, 4, 3);
        double serial = timeIt([&] { (void)psiElementSerial(e); }, 10);
        double parallel = timeIt([&] { (void)psiElement(e); }, 10);
        if (!(psiElement(e) == psiElementSerial(e))) {
            std::printf("psi kernels disagree!\n");
            return 1;
        }
        std::printf("psi image accumulation (24 terms, dim 256)\n");
        std::printf("  serial   %.4f s\n  openmp   %.4f s  (x%.2f)\n\n", serial, parallel,
                    serial / parallel);
    }

    {
        SdpSpec spec = majoritySpec(4);
        IdempotentSet idem = lastEdgeAnsatz(3, 1, 4);
        parallelEnabled() = false;
        double serial = timeIt([&] { (void)convert(spec, idem); }, 5);
        parallelEnabled() = true;
        double parallel = timeIt([&] { (void)convert(spec, idem); }, 5);
        std::printf("LP conversion trace loop (majority vote, d = 4)\n");
        std::printf("  serial   %.4f s\n  openmp   %.4f s  (x%.2f)\n", serial, parallel,
                    serial / parallel);
    }
    return 0;
}
