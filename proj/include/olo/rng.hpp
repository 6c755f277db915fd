#pragma once

#include <cmath>
#include <cstdint>

#include "olo/vec.hpp"

namespace olo {

// splitmix64, run in counter mode.  Chosen over std::mt19937_64 because the
// standard distributions are not bit-portable across standard libraries and
// we need sequences that regenerate identically everywhere from a seed.
// Streams are derived by mixing a stream id into the seed, one stream per
// (trial, learner) pair.
class SplitMix64 {
public:
    static constexpr const char* kName = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return (next() & 1ULL) != 0; }
    double sign() { return coin() ? 1.0 : -1.0; }

    // Box-Muller, no caching: state stays a single 64-bit word.
    double gaussian() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    Vec gaussian_vec(std::size_t d) {
        Vec v(d);
        for (double& x : v) x = gaussian();
        return v;
    }

    // Random point on the unit sphere (d = 1 gives +-1).
    Vec unit_vec(std::size_t d) {
        for (;;) {
            Vec v = gaussian_vec(d);
            double n = norm(v);
            if (n > 1e-12) return scaled(v, 1.0 / n);
        }
    }

    // Derives an independent stream from (seed, stream id).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0xD1342543DE82EF95ULL * (stream + 1)));
        g.next();
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace olo
