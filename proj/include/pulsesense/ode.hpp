#ifndef PULSESENSE_ODE_HPP
#define PULSESENSE_ODE_HPP

#include <functional>
#include <vector>

#include "pulsesense/models.hpp"
#include "pulsesense/su2.hpp"

namespace pulsesense {

/// Time-dependent drive in dimensionless units (times in units of the pulse
/// width T, rates in units of 1/T).
struct PulseWaveform {
    std::function<double(double)> rabi;      ///< Omega(t)*T
    std::function<double(double)> detuning;  ///< Delta(t)*T
    double t_min = 0.0;
    double t_max = 0.0;
    /// Interior times where the drive jumps; integration is split there so the
    /// stepper never straddles a discontinuity.
    std::vector<double> breakpoints;
    /// Primitive of the detuning, Phi(t) = integral_0^t Delta; used to map the
    /// window propagator into the asymptotic frame of the closed forms.
    std::function<double(double)> detuning_phase;
    /// True for pulses with infinite tails (sech shapes), whose closed forms
    /// live in the stripped frame. Compact-support pulses compare raw.
    bool strip_asymptotic_phases = false;
};

struct IntegrationConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_steps = 200000;

    IntegrationConfig() = default;
    IntegrationConfig(double abs_tol_, double rel_tol_, int max_steps_);

    /// Bypasses the tolerance bounds; for deliberately degraded verification
    /// runs only.
    static IntegrationConfig unchecked(double abs_tol_, double rel_tol_, int max_steps_);
};

struct IntegrationResult {
    Propagator u;
    double unitarity_defect;  ///< defect before re-orthonormalization
    int steps;                ///< accepted steps
};

/// Integrates i dU/dt = H(t) U over the waveform window with an adaptive
/// embedded Dormand-Prince 5(4) pair, both basis columns at once. The window
/// may be traversed backwards (t_max < t_min is not required; pass a reversed
/// waveform instead). Throws ToleranceNotMet or UnitarityLost.
IntegrationResult integrate_propagator(const PulseWaveform& waveform, const IntegrationConfig& cfg);

/// Waveform for a pulse model. sech-based windows default to [-24, 24], wide
/// enough that the truncated tails perturb the propagator below 1e-9; the
/// rectangular pulse window is exactly [-1/2, 1/2].
PulseWaveform make_waveform(const PulseModel& model, double sech_window_halfwidth = 24.0);

/// Single-pulse propagator computed by integration, mapped into the frame of
/// the closed-form Cayley-Klein parameters (detuning phases stripped for
/// sech-tailed models). This is the independent oracle the closed forms are
/// checked against.
Propagator single_pulse_oracle(const PulseModel& model, const IntegrationConfig& cfg,
                               double sech_window_halfwidth = 24.0);

/// Same as single_pulse_oracle but also reports defect and step count.
IntegrationResult single_pulse_oracle_result(const PulseModel& model, const IntegrationConfig& cfg,
                                             double sech_window_halfwidth = 24.0);

} // namespace pulsesense

#endif
