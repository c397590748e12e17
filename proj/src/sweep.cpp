#include "pulsesense/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "pulsesense/errors.hpp"
#include "pulsesense/rng.hpp"

namespace pulsesense {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

bool close(double x, double y, double tol = 1e-12) { return std::abs(x - y) <= tol; }

double point_probability(const ModelSpec& spec, const SequenceSpec& seq, double delta,
                         Provenance prov, const SweepOptions& opts) {
    const Propagator u = prov == Provenance::ClosedForm
                             ? pulse_propagator(spec, delta)
                             : single_pulse_oracle(PulseModel(spec, delta), opts.ode_cfg,
                                                   opts.ode_window);
    return sequence_probability(u, seq);
}

} // namespace

SweepProfile sweep(const ModelSpec& spec, const SequenceSpec& seq, double delta_min,
                   double delta_max, int n_points, Provenance provenance,
                   const SweepOptions& opts) {
    spec.validate();
    if (!std::isfinite(delta_min) || !std::isfinite(delta_max) || delta_min >= delta_max)
        throw ValidationError("sweep: need a finite range with delta_min < delta_max");
    if (delta_min > 0.0 || delta_max < 0.0)
        throw ValidationError("sweep: the detuning range must contain 0");
    if (n_points < 51) throw ValidationError("sweep: n_points must be >= 51");
    if (opts.shots < 0) throw ValidationError("sweep: shots must be >= 0");

    std::vector<double> deltas(n_points);
    for (int k = 0; k < n_points; ++k)
        deltas[k] = (delta_min * (n_points - 1 - k) + delta_max * k) / (n_points - 1);
    if (std::none_of(deltas.begin(), deltas.end(), [](double d) { return d == 0.0; })) {
        deltas.push_back(0.0);
        std::sort(deltas.begin(), deltas.end());
    }

    const int total = static_cast<int>(deltas.size());
    std::vector<GridPoint> grid(total);
    auto work = [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            double p = point_probability(spec, seq, deltas[k], provenance, opts);
            if (opts.shots > 0)
                p = binomial_mean(p, opts.shots, mix_seed(opts.seed, static_cast<std::uint64_t>(k)));
            grid[k] = GridPoint{deltas[k], p};
        }
    };

    int threads = opts.threads;
    if (threads <= 0)
        threads = total >= 400 ? static_cast<int>(std::min(4u, std::thread::hardware_concurrency()))
                               : 1;
    threads = std::max(threads, 1);
    if (threads == 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int b = t * chunk;
            const int e = std::min(total, b + chunk);
            if (b < e) pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return SweepProfile{spec, seq, std::move(grid), provenance};
}

std::optional<double> paper_formula_hwhm(const ModelSpec& spec, const SequenceSpec& seq) {
    const double n = seq.n_pulses;
    switch (spec.family) {
        case ModelFamily::RosenZener:
            if (!close(spec.alpha, 1.0)) return std::nullopt;
            if (seq.mode == PhaseMode::Alternating) return std::sqrt(2.0) / (n * kPi);
            if (seq.n_pulses % 2 == 0) return 1.0 / std::sqrt(n * kPi * std::sqrt(2.0) * kLn2);
            return std::nullopt;
        case ModelFamily::Rabi:
            if (!close(spec.alpha, kPi) || seq.mode != PhaseMode::Alternating) return std::nullopt;
            return kPi / (std::sqrt(2.0) * n);
        case ModelFamily::DemkovKunike:
            if (!close(spec.alpha, 2.0) || !close(spec.beta, 2.0) ||
                seq.mode != PhaseMode::Alternating)
                return std::nullopt;
            return 4.3 / n;
    }
    return std::nullopt;
}

double default_scan_range(const ModelSpec& spec) {
    return spec.family == ModelFamily::DemkovKunike ? 6.0 : 4.0;
}

namespace {

SensitivityReport hwhm_impl(const ModelSpec& spec, const SequenceSpec& seq, double max_abs_delta,
                            const HwhmOptions& opts) {
    spec.validate();
    const FeatureKind kind = seq.n_pulses % 2 == 1 ? FeatureKind::Spike : FeatureKind::Dip;
    const auto formula = paper_formula_hwhm(spec, seq);

    auto prob = [&](double d) { return sequence_probability(pulse_propagator(spec, d), seq); };
    const double half = 0.5;
    // crossing direction: a spike starts above 1/2 and falls through it, a dip
    // starts below and rises
    auto crossed = [&](double p) { return kind == FeatureKind::Spike ? p <= half : p >= half; };

    if (crossed(prob(0.0)))
        throw FeatureNotResolved("hwhm: no central feature (P(0) is on the wrong side of 1/2)");

    double step = formula ? *formula / 20.0 : max_abs_delta / 2000.0;
    step = std::min(step, max_abs_delta / 8.0);
    double lo = 0.0;
    double hi = step;
    while (!crossed(prob(hi))) {
        lo = hi;
        hi += step;
        if (hi > max_abs_delta)
            throw FeatureNotResolved("hwhm: no half-level crossing within the scan range");
    }
    while (hi - lo > opts.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        (crossed(prob(mid)) ? hi : lo) = mid;
    }
    SensitivityReport report;
    report.hwhm_dimensionless = 0.5 * (lo + hi);
    report.formula_value = formula;
    report.feature_kind = kind;
    if (opts.pulse_width_seconds)
        report.hwhm_physical_per_second =
            physical_sensitivity(report.hwhm_dimensionless, *opts.pulse_width_seconds);
    return report;
}

} // namespace

SensitivityReport hwhm(const ModelSpec& spec, const SequenceSpec& seq, const HwhmOptions& opts) {
    const double range = opts.max_abs_delta > 0.0 ? opts.max_abs_delta : default_scan_range(spec);
    return hwhm_impl(spec, seq, range, opts);
}

SensitivityReport hwhm(const SweepProfile& profile, const HwhmOptions& opts) {
    double range = 0.0;
    for (const auto& gp : profile.grid) range = std::max(range, std::abs(gp.delta));
    HwhmOptions o = opts;
    o.max_abs_delta = range;
    return hwhm_impl(profile.model, profile.seq, range, o);
}

double approx_profile(const ModelSpec& spec, const SequenceSpec& seq, double delta) {
    spec.validate();
    const double d2 = delta * delta;
    const int N = seq.n_pulses;
    const bool even = N % 2 == 0;
    const double n = even ? N / 2.0 : (N - 1) / 2.0;  // pulse count N = 2n or 2n+1
    double p = 0.0;
    switch (spec.family) {
        case ModelFamily::RosenZener: {
            if (!close(spec.alpha, 1.0))
                throw UnsupportedCase("approx_profile: Rosen-Zener case tabulated for alpha = 1 only");
            if (seq.mode == PhaseMode::Same) {
                if (even) {
                    const double c = 2.0 * n * kPi * kLn2;
                    p = c * c * d2 * d2;
                } else {
                    const double quartic = (kPi * kPi / 24.0 - 4.0 * n * (n + 1.0) * kLn2 * kLn2) *
                                           kPi * kPi * d2 * d2;
                    p = 1.0 - 0.25 * kPi * kPi * d2 + quartic;
                }
            } else {
                p = even ? n * n * kPi * kPi * d2 : 1.0 - (n + 0.5) * (n + 0.5) * kPi * kPi * d2;
            }
            break;
        }
        case ModelFamily::Rabi: {
            if (!close(spec.alpha, kPi))
                throw UnsupportedCase("approx_profile: Rabi case tabulated for alpha = pi only");
            if (seq.mode == PhaseMode::Same)
                throw UnsupportedCase("approx_profile: no same-phase Rabi approximation");
            p = even ? (2.0 * n) * (2.0 * n) * d2 / (kPi * kPi)
                     : 1.0 - static_cast<double>(N) * N * d2 / (kPi * kPi);
            break;
        }
        case ModelFamily::DemkovKunike: {
            if (!close(spec.alpha, 2.0) || !close(spec.beta, 2.0))
                throw UnsupportedCase("approx_profile: Demkov-Kunike case tabulated for alpha = beta = 2");
            if (seq.mode == PhaseMode::Same)
                throw UnsupportedCase("approx_profile: no same-phase Demkov-Kunike approximation");
            const double scale = even ? 0.33 * n : 0.33 * (n + 0.5);
            const double dev = scale * scale * d2 * (1.0 + 0.438 * d2);
            p = even ? dev : 1.0 - dev;
            break;
        }
    }
    return std::clamp(p, 0.0, 1.0);
}

double physical_sensitivity(double hwhm_dimensionless, double pulse_width_seconds) {
    if (!(pulse_width_seconds > 0.0))
        throw ValidationError("physical_sensitivity: pulse width must be > 0");
    if (hwhm_dimensionless < 0.0)
        throw ValidationError("physical_sensitivity: half-width must be >= 0");
    return hwhm_dimensionless / pulse_width_seconds;
}

const char* to_string(PhaseMode mode) { return mode == PhaseMode::Same ? "same" : "alternating"; }

PhaseMode phase_mode_from_string(const std::string& s) {
    if (s == "same") return PhaseMode::Same;
    if (s == "alternating") return PhaseMode::Alternating;
    throw ValidationError("unknown phase mode '" + s + "' (expected same|alternating)");
}

const char* to_string(FeatureKind kind) { return kind == FeatureKind::Spike ? "spike" : "dip"; }

const char* to_string(Provenance p) {
    return p == Provenance::ClosedForm ? "closed_form" : "ode_oracle";
}

} // namespace pulsesense
