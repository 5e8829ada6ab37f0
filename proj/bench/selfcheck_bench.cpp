// Compares the serial reference driver of the exhaustive self-check against
// the OpenMP driver on the same universe and verifies the reports agree.
//
//   selfcheck_bench [maxDegree] [maxK] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "speh/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace speh;

namespace {

template <class Fn>
double timeIt(Fn&& fn, int repeats) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto start = std::chrono::steady_clock::now();
        fn();
        double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (t < best) best = t;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    int maxDegree = argc > 1 ? std::atoi(argv[1]) : 10;
    int maxK = argc > 2 ? std::atoi(argv[2]) : 4;
    int repeats = argc > 3 ? std::atoi(argv[3]) : 1;

    Alphabet alphabet = Alphabet::fromSymbols({
        {"r0", 1, "r0", "r0", 0},
        {"r1", 2, "r1", "r1", 1},
        {"t", 1, "t", "ts", std::nullopt},
        {"ts", 1, "ts", "t", std::nullopt},
    });
    UniverseSpec spec{alphabet, maxDegree, maxK, {Rat(1, 4), Rat(1, 3)}};

    std::printf("universe degree <= %d, k <= %d\n", maxDegree, maxK);
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both drivers run serially\n");
#endif

    CrossCheckReport serial;
    CrossCheckReport parallel;
    double ts = timeIt([&] { serial = crossCheckSerial(spec); }, repeats);
    double tp = timeIt([&] { parallel = crossCheck(spec); }, repeats);

    std::printf("serial   driver: %8.3f s  (%s)\n", ts, serial.ok() ? "ok" : "FAILED");
    std::printf("parallel driver: %8.3f s  (%s)\n", tp, parallel.ok() ? "ok" : "FAILED");
    std::printf("speedup: %.2fx\n", ts / tp);

    if (serial.toJson(spec) != parallel.toJson(spec)) {
        std::printf("ERROR: drivers disagree\n");
        return 1;
    }
    std::printf("reports identical\n");
    return serial.ok() && parallel.ok() ? 0 : 1;
}
