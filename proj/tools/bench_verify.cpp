// Compares the serial reference sweeps against the OpenMP kernels on a
// generated population of rigs. Usage: bench_verify [count] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rigging/batch.hpp"

using namespace rigging;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double best_of(int repeats, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 400;
    int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    std::vector<RigCert> certs;
    certs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        TwistStore store;
        TrieNodeStore nodes;
        ScenarioBuilder builder(store, nodes, static_cast<std::uint64_t>(i));
        switch (i % 4) {
            case 0: certs.push_back(builder.half_hitch(i % 3, i % 2).rig); break;
            case 1: certs.push_back(builder.spliced_chain(2 + i % 3)); break;
            case 2: certs.push_back(builder.lashed(1 + i % 3)); break;
            default: certs.push_back(builder.custody_transfer()); break;
        }
    }

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled (parallel kernels run serially)\n");
#endif
    std::printf("rigs: %d, repeats: %d (best-of)\n\n", count, repeats);

    double vs = best_of(repeats, [&] { verify_rigs_serial(certs); });
    double vp = best_of(repeats, [&] { verify_rigs_parallel(certs); });
    std::printf("%-24s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", "verify_rigs", vs, vp,
                vs / vp);

    double hs = best_of(repeats, [&] { holds_fast_sweep_serial(certs); });
    double hp = best_of(repeats, [&] { holds_fast_sweep_parallel(certs); });
    std::printf("%-24s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", "holds_fast_sweep",
                hs, hp, hs / hp);

    int pools = std::max(16, count / 8);
    double os = best_of(repeats, [&] { oracle_sweep_serial(7, pools); });
    double op = best_of(repeats, [&] { oracle_sweep_parallel(7, pools); });
    std::printf("%-24s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx (%d pools)\n",
                "oracle_sweep", os, op, os / op, pools);

    auto a = verify_rigs_serial(certs);
    auto b = verify_rigs_parallel(certs);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].ok != b[i].ok) {
            std::printf("MISMATCH at %zu\n", i);
            return 1;
        }
    }
    std::printf("\nserial and parallel verdicts agree on all %zu rigs\n", a.size());
    return 0;
}
