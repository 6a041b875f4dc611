#ifndef TCONF_RNG_HPP
#define TCONF_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace tconf {

// SplitMix64 step, used for seeding and for deriving stream keys.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * Seeded 64-bit generator (xoshiro256++) with independent streams.
 *
 * The stream for replicate r of a run seeded with s is Rng::stream(s, r),
 * whose state is derived by hashing (s, r). Replicated simulations draw one
 * stream per replicate, so results are bitwise identical no matter how the
 * replicates are scheduled across threads.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) {
            x = splitmix64(x);
            w = x;
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    static Rng stream(std::uint64_t seed, std::uint64_t replicate) {
        return Rng(splitmix64(splitmix64(seed) ^ (replicate + 0x9E3779B97F4A7C15ULL)));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0,1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + uniform() * (b - a); }

    // Uniform integer in [0, k), widening-multiply method (bias < k/2^64).
    std::uint64_t uniform_below(std::uint64_t k) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * k) >> 64);
    }

    // Standard normal via Box-Muller; consumes exactly two draws per call so
    // the stream position does not depend on call history.
    double normal() {
        double u = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0,1]
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace tconf

#endif
