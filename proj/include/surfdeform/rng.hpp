#pragma once

#include <cmath>
#include <cstdint>

namespace surfdeform {

// Counter-based generator (splitmix64 core). Streams are derived by hashing,
// so (seed, trial, qubit) style substreams are independent and a parallel
// worker pool produces the same numbers as a serial loop.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x5bf0363563f1fd17ULL)) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Independent substream addressed by up to three indices.
    Rng substream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const {
        Rng r(0);
        r.state_ = mix(mix(mix(state_ ^ a) ^ b) ^ c);
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free would bias for huge n; n here is always tiny vs 2^64.
        return next_u64() % n;
    }

    // Exponential inter-arrival time with the given rate.
    double exponential(double rate) {
        double u = 0.0;
        do { u = next_double(); } while (u <= 0.0);
        return -std::log(u) / rate;
    }

private:
    std::uint64_t state_;
};

}  // namespace surfdeform
