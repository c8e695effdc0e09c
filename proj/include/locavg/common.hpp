#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace locavg {

using NodeId = int32_t;
using EdgeId = int32_t;

// Thrown on malformed user input (bad parameters, bad files). CLI maps it to exit code 2.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a program or rounder breaks its contract (double commit with a
// different value, rounder returning a non-matching, malformed instance).
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Every node draws randomness from its own stream; the stream seed is a fixed
// function of (run seed, node id) so traces are reproducible bit-for-bit.
inline uint64_t node_stream_seed(uint64_t run_seed, NodeId v) {
    return splitmix64(run_seed ^ splitmix64(0x5ca1ab1e00000000ULL + static_cast<uint64_t>(v)));
}

inline uint64_t edge_stream_seed(uint64_t run_seed, EdgeId e) {
    return splitmix64(run_seed ^ splitmix64(0x0ddba11000000000ULL + static_cast<uint64_t>(e)));
}

// Deterministic RNG wrapper. Bounded draws avoid std::uniform_int_distribution
// so results do not depend on the standard library implementation.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(splitmix64(seed)) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n), n >= 1
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

    // uniform double in [0, 1) with 53 random bits
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

  private:
    std::mt19937_64 eng_;
};

// Counter-based stream with 8 bytes of state, for per-node randomness where
// one mt19937_64 per node would cost too much memory. Draw contract matches
// Rng; chance() is an exact rational Bernoulli.
class StreamRng {
  public:
    explicit StreamRng(uint64_t seed = 0) : s_(seed) {}

    uint64_t next() {
        uint64_t r = splitmix64(s_);
        s_ += 0x9e3779b97f4a7c15ULL;
        return r;
    }

    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // true with probability exactly num/den (num <= den)
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  private:
    uint64_t s_;
};

inline int log2_ceil(uint64_t x) {
    int b = 0;
    uint64_t v = 1;
    while (v < x) {
        v <<= 1;
        ++b;
    }
    return b;
}

inline int log2_floor(uint64_t x) {
    int b = -1;
    while (x) {
        x >>= 1;
        ++b;
    }
    return b;
}

// iterated log: number of times log2 must be applied to reach <= 2
inline int log_star(double n) {
    int c = 0;
    while (n > 2.0) {
        n = std::log2(n);
        ++c;
    }
    return c;
}

}  // namespace locavg
