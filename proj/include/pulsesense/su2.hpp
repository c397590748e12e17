#ifndef PULSESENSE_SU2_HPP
#define PULSESENSE_SU2_HPP

#include <complex>

#include "pulsesense/errors.hpp"

namespace pulsesense {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTol = 1e-12;

/// SU(2) propagator stored as the Cayley-Klein pair (a, b).
/// Matrix form is [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 = 1.
/// Immutable value type; all operations return new values.
struct Propagator {
    Complex a;
    Complex b;

    Propagator(Complex a_, Complex b_);

    static Propagator identity() { return Propagator(Complex(1.0, 0.0), Complex(0.0, 0.0)); }

    /// Checks |a|^2+|b|^2 is within max_defect of 1, then rescales the pair
    /// onto the unit sphere exactly. Used where (a, b) come from inexact
    /// evaluations (gamma functions, numerical integration).
    static Propagator normalized(Complex a_, Complex b_, double max_defect);

    /// Transition probability p = |b|^2 for a system starting in state 1.
    double transition_probability() const { return std::norm(b); }
    /// Survival probability q = |a|^2.
    double survival_probability() const { return std::norm(a); }
    /// Stueckelberg phase of a.
    double xi() const { return std::arg(a); }
    /// Stueckelberg phase of b.
    double eta() const { return std::arg(b); }

    double unitarity_defect() const { return std::abs(std::norm(a) + std::norm(b) - 1.0); }
};

enum class PhaseMode { Same, Alternating };

/// An N-pulse sequence of one repeated pulse, with equal phases or with the
/// Rabi frequency sign flipped on every even pulse.
struct SequenceSpec {
    int n_pulses;
    PhaseMode mode;

    SequenceSpec(int n, PhaseMode m) : n_pulses(n), mode(m) {
        if (n < 1) throw ValidationError("SequenceSpec: n_pulses must be >= 1");
    }
};

/// theta = arccos(Re a), big_theta = arccos(1 - 2 (Im a)^2), both in [0, pi].
struct HalfAngles {
    double theta;
    double big_theta;
};

HalfAngles half_angles(const Propagator& u);

/// Matrix product second * first.
Propagator compose(const Propagator& second, const Propagator& first);

/// Propagator of the same pulse with the sign of the Rabi frequency flipped:
/// same a, negated b.
Propagator flip_sign(const Propagator& u);

/// U^n in closed form.
Propagator n_pass_same(const Propagator& u, int n);

/// Closed form for the sign-alternating sequence U ... U- U (n pulses).
/// Throws DegenerateSequence for n >= 2 when |Im a| = 1 within 1e-12.
Propagator n_pass_alternating(const Propagator& u, int n);

/// |lower-left element|^2 of the sequence propagator, clamped to [0, 1].
/// A raw value above 1 + 1e-12 raises InternalError rather than clamping.
double sequence_probability(const Propagator& u, const SequenceSpec& seq);

struct AsymptoticProbability {
    double value;
    bool within_validity;  // false when |a| >= 0.3
};

/// Small-|a| limit of the sequence probability (valid near complete
/// population transfer). Even N: N^2 a_r^2 (same) or N^2 a_i^2 (alternating);
/// odd N: 1 - a_i^2 - N^2 a_r^2 or 1 - N^2 a_i^2.
AsymptoticProbability asymptotic_probability(Complex a, const SequenceSpec& seq);

} // namespace pulsesense

#endif
