// SPDX-License-Identifier: Apache-2.0
//
// rc-symdet: deterministic random number generation.
//
// Every stochastic component of the simulator draws from a Xoshiro256**
// stream seeded through SplitMix64. Transforms are hand-rolled so that a
// given seed produces bit-identical streams on every platform (the standard
// <random> distributions are implementation-defined).

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace rcsd {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// FNV-1a on a label, used to key independent sub-streams by component name.
constexpr std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derives an independent seed for (master, component label, index).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view component,
                                    std::uint64_t index = 0) {
    std::uint64_t s = splitmix64(master ^ hash_label(component));
    return splitmix64(s ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s = splitmix64(s);
            word = s;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; never returns zero (safe for logarithms).
    double uniform01_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Integer uniform on [0, n) by rejection; exact for any n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0-n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01_open();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> complex_normal(double variance = 1.0) {
        const double sigma = std::sqrt(variance / 2.0);
        const double re = normal();
        const double im = normal();
        return {sigma * re, sigma * im};
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace rcsd
