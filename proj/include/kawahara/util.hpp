#ifndef KAWAHARA_UTIL_HPP
#define KAWAHARA_UTIL_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>

namespace kawahara {

// Smooth even cutoff: 1 on [-1,1], 0 outside (-2,2), C-infinity in between.
inline double psi_cutoff(double t) {
    double a = std::fabs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    auto bump = [](double s) { return std::exp(-1.0 / s); };
    double up = bump(2.0 - a);
    return up / (up + bump(a - 1.0));
}

// Cutoff rescaled to equal 1 on [-w, w] and vanish outside (-2w, 2w).
inline double psi_cutoff(double t, double w) { return psi_cutoff(t / w); }

// Cap on worker threads (env KAWAHARA_THREADS, else hardware concurrency).
int max_threads();

// Runs f(i) for i in [0, n) on up to max_threads() workers. Each index writes
// only its own slots, so results are identical for any schedule.
void parallel_for(int n, const std::function<void(int)>& f);

// SplitMix64: tiny deterministic RNG with identical output on all platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; } // [0,1)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive range
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }
};

inline double sq(double x) { return x * x; }

// <x> = (1 + x^2)^(1/2)
inline double jap(double x) { return std::sqrt(1.0 + x * x); }

} // namespace kawahara

#endif
