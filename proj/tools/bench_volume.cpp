// Benchmark: OpenMP volume kernel vs the serial reference.  Also asserts the
// two produce bit-identical results.
#include "qmod/volume.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qmod;

template <typename F>
static double timed(F f, VolumeEstimate& out) {
    auto start = std::chrono::steady_clock::now();
    out = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

int main(int argc, char** argv) {
    long long samples = argc > 1 ? std::atoll(argv[1]) : 20'000'000;
    std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    for (DomainTag tag : {DomainTag::PL, DomainTag::PH}) {
        VolumeEstimate par, ser;
        double tp = timed([&] { return volume_mc(tag, samples, seed); }, par);
        double ts = timed([&] { return volume_mc_serial(tag, samples, seed); }, ser);
        bool same = par.estimate == ser.estimate && par.stderr_ == ser.stderr_;
        std::printf("%-3s n=%lld  parallel %.3fs  serial %.3fs  speedup %.2fx  "
                    "estimate %.8f +- %.8f  identical=%s\n",
                    domain_name(tag).c_str(), samples, tp, ts, ts / tp, par.estimate,
                    par.stderr_, same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}
