// Stratified Monte Carlo hyperbolic volume of the fundamental domains.
//
// The integral is Vol = ∫ dx0 dx1 dx2 dx3 / x0^4 over the domain.  We sample
// the box (0, X_MAX) x [-1/2,1/2]^3 with x0 stratified into NUM_STRATA equal
// slabs, and add the analytic tail beyond X_MAX where the cross-section is a
// constant-area set: tail = base_area * ∫_{X_MAX}^∞ dx0/x0^4.
//
// Determinism: each stratum owns an independent RNG stream seeded from
// (seed, stratum); per-stratum sums are reduced in stratum order, so the
// result is bit-identical regardless of thread count.  The OpenMP kernel and
// the serial reference therefore agree exactly.
#pragma once

#include "qmod/domains.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmod {

struct VolumeEstimate {
    double estimate;
    double stderr_;
    long long samples;
    std::uint64_t seed;
};

namespace mc {

constexpr double X_MAX = 4.0;
constexpr int NUM_STRATA = 64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// uniform double in [0,1) from the top 53 bits
inline double u01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

// cross-section area of the domain for x0 >= 1, where it is constant
inline double base_area(DomainTag tag) {
    switch (tag) {
        case DomainTag::Chimney:
        case DomainTag::P: return 1.0;
        case DomainTag::PL: return 0.25;       // sign-uniform: 2 * (1/2)^3
        default: return 1.0 / 12.0;            // PH: third of PL
    }
}

struct StratumResult {
    double sum = 0, sum_sq = 0;
    long long n = 0;
};

inline StratumResult run_stratum(DomainTag tag, int stratum, long long n,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed ^ (0xabcd0000ULL + stratum)));
    double width = X_MAX / NUM_STRATA;
    double lo = stratum * width;
    StratumResult r;
    r.n = n;
    for (long long s = 0; s < n; ++s) {
        double x0 = lo + u01(rng) * width;
        double x1 = u01(rng) - 0.5;
        double x2 = u01(rng) - 0.5;
        double x3 = u01(rng) - 0.5;
        double f = 0.0;
        if (x0 > 0 && contains_f(tag, x0, x1, x2, x3)) {
            double x0sq = x0 * x0;
            f = 1.0 / (x0sq * x0sq);
        }
        r.sum += f;
        r.sum_sq += f * f;
    }
    return r;
}

inline VolumeEstimate combine(DomainTag tag, const std::vector<StratumResult>& parts,
                              long long samples, std::uint64_t seed) {
    double width = X_MAX / NUM_STRATA;
    double est = 0, var = 0;
    for (const auto& p : parts) {
        double mean = p.sum / p.n;
        double v = (p.sum_sq / p.n - mean * mean) / p.n;
        est += mean * width;        // box volume of a stratum = width * 1
        var += v * width * width;
    }
    // analytic tail: base_area * [x0^-3 / 3]_{X_MAX}^inf
    est += base_area(tag) / (3.0 * X_MAX * X_MAX * X_MAX);
    return {est, std::sqrt(var), samples, seed};
}

inline std::vector<long long> stratum_counts(long long samples) {
    std::vector<long long> n(NUM_STRATA, samples / NUM_STRATA);
    for (long long r = 0; r < samples % NUM_STRATA; ++r) n[r] += 1;
    return n;
}

}  // namespace mc

// Serial reference implementation.
inline VolumeEstimate volume_mc_serial(DomainTag tag, long long samples,
                                       std::uint64_t seed) {
    if (samples < 10000) throw std::invalid_argument("need at least 10^4 samples");
    auto counts = mc::stratum_counts(samples);
    std::vector<mc::StratumResult> parts(mc::NUM_STRATA);
    for (int s = 0; s < mc::NUM_STRATA; ++s)
        parts[s] = mc::run_stratum(tag, s, counts[s], seed);
    return mc::combine(tag, parts, samples, seed);
}

// OpenMP kernel; bit-identical to the serial reference.
inline VolumeEstimate volume_mc(DomainTag tag, long long samples, std::uint64_t seed) {
    if (samples < 10000) throw std::invalid_argument("need at least 10^4 samples");
    auto counts = mc::stratum_counts(samples);
    std::vector<mc::StratumResult> parts(mc::NUM_STRATA);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < mc::NUM_STRATA; ++s)
        parts[s] = mc::run_stratum(tag, s, counts[s], seed);
    return mc::combine(tag, parts, samples, seed);
}

}  // namespace qmod
