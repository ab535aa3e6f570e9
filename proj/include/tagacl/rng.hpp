#pragma once

#include <cstdint>
#include <random>

#include "tagacl/bytes.hpp"

namespace tagacl {

// Deterministic randomness source. Every component that needs entropy takes
// one of these by reference, so a whole simulation replays from a single
// seed. The draw counter makes the stream position serializable: restoring
// (seed, draws) and discarding reproduces the exact state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    Rng(std::uint64_t seed, std::uint64_t draws) : Rng(seed) {
        engine_.discard(draws);
        draws_ = draws;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draws() const { return draws_; }

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    // Uniform in [0, bound); bound > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [lo, hi], inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("Rng::between: empty range");
        return lo + below(hi - lo + 1);
    }

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = static_cast<std::uint8_t>(next_u64() & 0xff);
        return out;
    }

    // Deterministic independent substream (used to give each simulated party
    // its own source from one master seed).
    Rng child(std::uint64_t salt) {
        std::uint64_t x = next_u64() ^ (salt + 0x9e3779b97f4a7c15ULL);
        // splitmix64 finalizer
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
    std::mt19937_64 engine_;
};

} // namespace tagacl
