// SPDX-License-Identifier: Apache-2.0
//
// Counter-based splittable random stream.
//
// output(i) = splitmix64_finalizer(key + i*golden). Identical seeds give
// bit-identical sequences on every platform; split(j) derives an independent
// child stream, so trials can be parallelized without sharing state.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace nslink {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed + kGolden) ^ mix(stream + kLeaf))) {}

    // Independent substream; distinct child indices give distinct keys.
    RandomStream split(std::uint64_t child) const {
        RandomStream s(0);
        s.key_ = mix(key_ ^ mix(child + kLeaf));
        s.counter_ = 0;
        return s;
    }

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

    // Uniform on (0, 1]; never 0, so log() below is safe.
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // N(0, 1) via Box-Muller; consumes exactly two words per call.
    double gaussian() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    // Circularly symmetric CN(0, 1): re and im are independent N(0, 1/2).
    std::complex<double> cgaussian() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log(u1));
        return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kLeaf = 0xD1B54A32D192ED03ULL;
    static constexpr double kPi = 3.14159265358979323846;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace nslink
