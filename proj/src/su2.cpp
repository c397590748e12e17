#include "pulsesense/su2.hpp"

#include <algorithm>
#include <cmath>

namespace pulsesense {

namespace {

// sin(n*x)/sin(x) with the removable singularity handled: below the guard
// the analytic limit n*cos((n-1)*x) is exact to O(n^2 x^2) at both x ~ 0
// and x ~ pi.
double dirichlet_ratio(int n, double x) {
    const double s = std::sin(x);
    if (std::abs(s) < 1e-8) return n * std::cos((n - 1) * x);
    return std::sin(n * x) / s;
}

double clamp_to_unit(double x) { return std::clamp(x, -1.0, 1.0); }

} // namespace

Propagator::Propagator(Complex a_, Complex b_) : a(a_), b(b_) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kUnitarityTol)
        throw ValidationError("Propagator: |a|^2 + |b|^2 deviates from 1 beyond 1e-12");
}

Propagator Propagator::normalized(Complex a_, Complex b_, double max_defect) {
    const double n2 = std::norm(a_) + std::norm(b_);
    if (std::abs(n2 - 1.0) > max_defect)
        throw InternalError("Propagator::normalized: unitarity defect above tolerance");
    const double inv = 1.0 / std::sqrt(n2);
    return Propagator(a_ * inv, b_ * inv);
}

HalfAngles half_angles(const Propagator& u) {
    const double ai = u.a.imag();
    return HalfAngles{std::acos(clamp_to_unit(u.a.real())),
                      2.0 * std::asin(std::min(std::abs(ai), 1.0))};
}

Propagator compose(const Propagator& second, const Propagator& first) {
    const Complex a = second.a * first.a - std::conj(second.b) * first.b;
    const Complex b = second.b * first.a + std::conj(second.a) * first.b;
    return Propagator(a, b);
}

Propagator flip_sign(const Propagator& u) { return Propagator(u.a, -u.b); }

Propagator n_pass_same(const Propagator& u, int n) {
    if (n < 1) throw ValidationError("n_pass_same: n must be >= 1");
    if (n == 1) return u;
    const double theta = std::acos(clamp_to_unit(u.a.real()));
    const double ratio = dirichlet_ratio(n, theta);
    const Complex a(std::cos(n * theta), u.a.imag() * ratio);
    return Propagator::normalized(a, u.b * ratio, 1e-9);
}

Propagator n_pass_alternating(const Propagator& u, int n) {
    if (n < 1) throw ValidationError("n_pass_alternating: n must be >= 1");
    if (n == 1) return u;
    const double ar = u.a.real();
    const double ai = u.a.imag();
    if (1.0 - std::abs(ai) <= 1e-12)
        throw DegenerateSequence("n_pass_alternating: pulse is a pure phase gate (|Im a| = 1)");

    // Pair propagator U-U has Re a' = 1 - 2 ai^2, so Theta = 2 asin|ai|.
    const double big_theta = 2.0 * std::asin(std::min(std::abs(ai), 1.0));
    if (n % 2 == 0) {
        const int m = n / 2;
        const double S = dirichlet_ratio(m, big_theta);
        const Complex a(std::cos(m * big_theta), 2.0 * ar * ai * S);
        const Complex b = Complex(0.0, -2.0) * u.b * (ai * S);
        return Propagator::normalized(a, b, 1e-9);
    }
    const int m = (n - 1) / 2;
    const double S = dirichlet_ratio(m, big_theta);
    const double C = std::cos((m + 0.5) * big_theta) / std::cos(0.5 * big_theta);
    const Complex a = u.a * C + Complex(0.0, 2.0 * ai * S);
    return Propagator::normalized(a, u.b * C, 1e-9);
}

double sequence_probability(const Propagator& u, const SequenceSpec& seq) {
    const Propagator w = seq.mode == PhaseMode::Same ? n_pass_same(u, seq.n_pulses)
                                                     : n_pass_alternating(u, seq.n_pulses);
    const double p = std::norm(w.b);
    if (p > 1.0 + 1e-12)
        throw InternalError("sequence_probability: probability exceeds 1 beyond rounding");
    return std::clamp(p, 0.0, 1.0);
}

AsymptoticProbability asymptotic_probability(Complex a, const SequenceSpec& seq) {
    const double ar = a.real();
    const double ai = a.imag();
    const double n2 = static_cast<double>(seq.n_pulses) * seq.n_pulses;
    double value;
    if (seq.mode == PhaseMode::Same)
        value = seq.n_pulses % 2 == 0 ? n2 * ar * ar : 1.0 - ai * ai - n2 * ar * ar;
    else
        value = seq.n_pulses % 2 == 0 ? n2 * ai * ai : 1.0 - n2 * ai * ai;
    return AsymptoticProbability{value, std::abs(a) < 0.3};
}

} // namespace pulsesense
