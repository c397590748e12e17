#include "pulsesense/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pulsesense/errors.hpp"

namespace pulsesense {

namespace {

constexpr Complex kI{0.0, 1.0};

// State: both columns of U, (u00, u10, u01, u11).
using State = std::array<Complex, 4>;

State rhs(const PulseWaveform& wf, double t, const State& y) {
    const double om = 0.5 * wf.rabi(t);
    const double de = 0.5 * wf.detuning(t);
    State dy;
    for (int col = 0; col < 2; ++col) {
        const Complex u0 = y[2 * col];
        const Complex u1 = y[2 * col + 1];
        dy[2 * col] = -kI * (-de * u0 + om * u1);
        dy[2 * col + 1] = -kI * (om * u0 + de * u1);
    }
    return dy;
}

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// Difference between the 5th and embedded 4th order weights.
constexpr double kE[7] = {71.0 / 57600,  0.0,          -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

struct Segment {
    double t0, t1;
};

// One adaptive stretch between discontinuities. Accumulates accepted steps
// into `steps`; throws ToleranceNotMet when the budget runs out.
State integrate_segment(const PulseWaveform& wf, const IntegrationConfig& cfg, Segment seg,
                        State y, int& steps) {
    const double span = seg.t1 - seg.t0;
    if (span == 0.0) return y;
    const double dir = span > 0.0 ? 1.0 : -1.0;
    double t = seg.t0;
    double h = dir * std::min(0.1, std::abs(span) / 10.0);
    const double h_min = std::abs(span) * 1e-14;

    std::array<State, 7> k;
    while (dir * (seg.t1 - t) > 0.0) {
        if (++steps > cfg.max_steps)
            throw ToleranceNotMet("integrate_propagator: step budget exhausted");
        if (dir * (t + h) > dir * seg.t1) h = seg.t1 - t;

        k[0] = rhs(wf, t, y);
        for (int i = 1; i < 7; ++i) {
            State yi = y;
            for (int j = 0; j < i; ++j) {
                if (kA[i][j] == 0.0) continue;
                const double w = h * kA[i][j];
                for (int n = 0; n < 4; ++n) yi[n] += w * k[j][n];
            }
            k[i] = rhs(wf, t + kC[i] * h, yi);
        }
        // k[6] row of A is the 5th-order solution weights
        State y5 = y;
        for (int j = 0; j < 6; ++j) {
            if (kA[6][j] == 0.0) continue;
            const double w = h * kA[6][j];
            for (int n = 0; n < 4; ++n) y5[n] += w * k[j][n];
        }
        double err = 0.0;
        for (int n = 0; n < 4; ++n) {
            Complex e(0.0, 0.0);
            for (int j = 0; j < 7; ++j) e += kE[j] * k[j][n];
            e *= h;
            const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[n]), std::abs(y5[n]));
            const double r = std::abs(e) / scale;
            err += r * r;
        }
        err = std::sqrt(err / 4.0);

        if (err <= 1.0) {
            t += h;
            y = y5;
        }
        const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (std::abs(h) < h_min)
            throw ToleranceNotMet("integrate_propagator: step size underflow");
    }
    return y;
}

double stable_log_cosh(double t) {
    const double a = std::abs(t);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

} // namespace

IntegrationConfig::IntegrationConfig(double abs_tol_, double rel_tol_, int max_steps_)
    : abs_tol(abs_tol_), rel_tol(rel_tol_), max_steps(max_steps_) {
    if (!(abs_tol > 0.0) || abs_tol > 1e-4 || !(rel_tol > 0.0) || rel_tol > 1e-4)
        throw ValidationError("IntegrationConfig: tolerances must lie in (0, 1e-4]");
    if (max_steps < 10000) throw ValidationError("IntegrationConfig: max_steps must be >= 1e4");
}

IntegrationConfig IntegrationConfig::unchecked(double abs_tol_, double rel_tol_, int max_steps_) {
    IntegrationConfig cfg;
    cfg.abs_tol = abs_tol_;
    cfg.rel_tol = rel_tol_;
    cfg.max_steps = max_steps_;
    return cfg;
}

IntegrationResult integrate_propagator(const PulseWaveform& wf, const IntegrationConfig& cfg) {
    if (!std::isfinite(wf.t_min) || !std::isfinite(wf.t_max))
        throw ValidationError("integrate_propagator: window must be finite");

    std::vector<double> cuts{wf.t_min};
    const double lo = std::min(wf.t_min, wf.t_max);
    const double hi = std::max(wf.t_min, wf.t_max);
    std::vector<double> interior;
    for (double b : wf.breakpoints)
        if (b > lo && b < hi) interior.push_back(b);
    std::sort(interior.begin(), interior.end());
    if (wf.t_max < wf.t_min) std::reverse(interior.begin(), interior.end());
    cuts.insert(cuts.end(), interior.begin(), interior.end());
    cuts.push_back(wf.t_max);

    State y{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
    int steps = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        y = integrate_segment(wf, cfg, Segment{cuts[i], cuts[i + 1]}, y, steps);

    // unitarity defect: max entry of U^dag U - I
    const Complex u00 = y[0], u10 = y[1], u01 = y[2], u11 = y[3];
    const Complex g00 = std::conj(u00) * u00 + std::conj(u10) * u10 - 1.0;
    const Complex g01 = std::conj(u00) * u01 + std::conj(u10) * u11;
    const Complex g11 = std::conj(u01) * u01 + std::conj(u11) * u11 - 1.0;
    const double defect = std::max({std::abs(g00), std::abs(g01), std::abs(g11)});
    if (defect > 1e-7)
        throw UnitarityLost("integrate_propagator: unitarity defect above 1e-7");

    // nearest Cayley-Klein pair: symmetrize the two estimates, then rescale
    const Complex a = 0.5 * (u00 + std::conj(u11));
    const Complex b = 0.5 * (u10 - std::conj(u01));
    return IntegrationResult{Propagator::normalized(a, b, 1e-6), defect, steps};
}

PulseWaveform make_waveform(const PulseModel& model, double sech_window_halfwidth) {
    if (!(sech_window_halfwidth > 0.0))
        throw ValidationError("make_waveform: window halfwidth must be > 0");
    const double alpha = model.spec.alpha;
    const double beta = model.spec.beta;
    const double delta = model.delta;
    PulseWaveform wf;
    switch (model.spec.family) {
        case ModelFamily::RosenZener:
            wf.rabi = [alpha](double t) { return alpha / std::cosh(t); };
            wf.detuning = [delta](double) { return delta; };
            wf.detuning_phase = [delta](double t) { return delta * t; };
            wf.t_min = -sech_window_halfwidth;
            wf.t_max = sech_window_halfwidth;
            wf.strip_asymptotic_phases = true;
            break;
        case ModelFamily::DemkovKunike:
            wf.rabi = [alpha](double t) { return alpha / std::cosh(t); };
            wf.detuning = [delta, beta](double t) { return delta + beta * std::tanh(t); };
            wf.detuning_phase = [delta, beta](double t) {
                return delta * t + beta * stable_log_cosh(t);
            };
            wf.t_min = -sech_window_halfwidth;
            wf.t_max = sech_window_halfwidth;
            wf.strip_asymptotic_phases = true;
            break;
        case ModelFamily::Rabi:
            wf.rabi = [alpha](double t) { return std::abs(t) <= 0.5 ? alpha : 0.0; };
            wf.detuning = [delta](double) { return delta; };
            wf.detuning_phase = [delta](double t) { return delta * t; };
            wf.t_min = -0.5;
            wf.t_max = 0.5;
            wf.breakpoints = {-0.5, 0.5};
            wf.strip_asymptotic_phases = false;
            break;
    }
    return wf;
}

IntegrationResult single_pulse_oracle_result(const PulseModel& model, const IntegrationConfig& cfg,
                                             double sech_window_halfwidth) {
    const PulseWaveform wf = make_waveform(model, sech_window_halfwidth);
    IntegrationResult res = integrate_propagator(wf, cfg);
    if (!wf.strip_asymptotic_phases) return res;
    const double phi0 = wf.detuning_phase(wf.t_min);
    const double phi1 = wf.detuning_phase(wf.t_max);
    const Complex a = std::exp(kI * (0.5 * (phi0 - phi1))) * res.u.a;
    const Complex b = std::exp(kI * (0.5 * (phi0 + phi1))) * res.u.b;
    return IntegrationResult{Propagator::normalized(a, b, 1e-6), res.unitarity_defect, res.steps};
}

Propagator single_pulse_oracle(const PulseModel& model, const IntegrationConfig& cfg,
                               double sech_window_halfwidth) {
    return single_pulse_oracle_result(model, cfg, sech_window_halfwidth).u;
}

} // namespace pulsesense
