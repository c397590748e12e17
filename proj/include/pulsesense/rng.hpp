#ifndef PULSESENSE_RNG_HPP
#define PULSESENSE_RNG_HPP

#include <cstdint>

namespace pulsesense {

/// splitmix64 step; used both as a generator and to derive independent
/// per-point seeds so parallel sweeps stay order-independent.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull + stream * 0xbf58476d1ce4e5b9ull);
    splitmix64(s);
    return s;
}

/// Deterministic uniform in [0, 1) built from the top 53 bits; identical
/// across platforms, unlike std::uniform_real_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // warm up so trivially different seeds decorrelate
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per call, the pair's second
    /// member is discarded to keep the call sequence simple).
    double normal();

private:
    std::uint64_t state_;
};

/// Mean of `shots` Bernoulli(p) draws; shots = 0 returns p exactly.
double binomial_mean(double p, int shots, std::uint64_t seed);

} // namespace pulsesense

#endif
