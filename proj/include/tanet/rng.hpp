#pragma once

#include <cstdint>
#include <random>

namespace tanet {

// splitmix64; used only to derive independent stream seeds from one master
// seed so that weight init, learning draws and environment draws never share
// a sequence.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seeded double generator. The 64-bit-to-double mapping is pinned by hand
// ((x >> 11) * 2^-53) instead of std::uniform_real_distribution, whose
// output differs between standard libraries; mt19937_64 itself is pinned by
// the standard, so streams are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// The three independent streams one trial owns.
struct RngStreams {
    Rng init;   // weight initialisation
    Rng learn;  // desired-activation draws
    Rng env;    // respawn cells and other world randomness
};

inline RngStreams make_streams(std::uint64_t master_seed) {
    std::uint64_t s = master_seed;
    const std::uint64_t a = splitmix64(s);
    const std::uint64_t b = splitmix64(s);
    const std::uint64_t c = splitmix64(s);
    return RngStreams{Rng(a), Rng(b), Rng(c)};
}

}  // namespace tanet
