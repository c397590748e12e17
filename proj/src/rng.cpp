#include "pulsesense/rng.hpp"

#include <cmath>
#include <numbers>

#include "pulsesense/errors.hpp"

namespace pulsesense {

double Rng::normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double binomial_mean(double p, int shots, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ValidationError("binomial_mean: probability outside [0, 1]");
    if (shots < 0) throw ValidationError("binomial_mean: shots must be >= 0");
    if (shots == 0) return p;
    Rng rng(seed);
    int hits = 0;
    for (int i = 0; i < shots; ++i)
        if (rng.uniform() < p) ++hits;
    return static_cast<double>(hits) / shots;
}

} // namespace pulsesense
