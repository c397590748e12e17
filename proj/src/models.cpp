#include "pulsesense/models.hpp"

#include <cmath>
#include <numbers>

#include "pulsesense/errors.hpp"
#include "pulsesense/gamma.hpp"

namespace pulsesense {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr Complex kI{0.0, 1.0};

// Unitarity tolerances on the raw (a, b) pair; the gamma-based models use a
// looser bound because unitarity is the consistency check on the gamma
// evaluations, the Rabi form is exact trigonometry.
constexpr double kGammaModelDefect = 1e-10;
constexpr double kRabiModelDefect = 1e-14;

bool close(double x, double y, double tol = 1e-12) { return std::abs(x - y) <= tol; }

} // namespace

ModelSpec ModelSpec::rosen_zener(double alpha) { return ModelSpec{ModelFamily::RosenZener, alpha, 0.0}; }
ModelSpec ModelSpec::rabi(double alpha) { return ModelSpec{ModelFamily::Rabi, alpha, 0.0}; }
ModelSpec ModelSpec::demkov_kunike(double alpha, double beta) {
    return ModelSpec{ModelFamily::DemkovKunike, alpha, beta};
}

void ModelSpec::validate() const {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw ValidationError("ModelSpec: alpha must be finite and > 0");
    if (!std::isfinite(beta)) throw ValidationError("ModelSpec: beta must be finite");
    if (family == ModelFamily::DemkovKunike) {
        if (beta < 0.0) throw ValidationError("ModelSpec: beta must be >= 0");
    } else if (beta != 0.0) {
        throw ValidationError("ModelSpec: beta applies to the Demkov-Kunike family only");
    }
}

PulseModel::PulseModel(ModelSpec s, double d) : spec(s), delta(d) {
    spec.validate();
    if (!std::isfinite(delta) || std::abs(delta) > 100.0)
        throw ValidationError("PulseModel: delta must be finite with |delta| <= 100");
}

Complex rosen_zener_a(double alpha, Complex delta) {
    const Complex nu = 0.5 * (1.0 + kI * delta);
    const double lambda = 0.5 * alpha;
    // Poles of the denominator gammas are zeros of a, handled by the entire
    // reciprocal; the numerator arguments have Re = 1/2 and cannot pole.
    return complex_gamma(nu) * complex_gamma(nu) * reciprocal_gamma(nu - lambda) *
           reciprocal_gamma(nu + lambda);
}

Complex rabi_a(double alpha, Complex delta) {
    const Complex kappa = std::sqrt(alpha * alpha + delta * delta);
    return std::cos(0.5 * kappa) + kI * delta * std::sin(0.5 * kappa) / kappa;
}

namespace {

struct DkParams {
    Complex lambda, mu, nu;
};

DkParams dk_params(double alpha, double beta, Complex delta) {
    // Principal branch: for beta > alpha the root is +i*sqrt(beta^2 - alpha^2).
    const Complex d = beta > alpha ? Complex(0.0, std::sqrt((beta - alpha) * (beta + alpha)))
                                   : Complex(std::sqrt((alpha - beta) * (alpha + beta)), 0.0);
    return DkParams{0.5 * (d - kI * beta), -0.5 * (d + kI * beta), 0.5 * (1.0 + kI * delta - kI * beta)};
}

} // namespace

Complex demkov_kunike_a(double alpha, double beta, Complex delta) {
    const auto [lambda, mu, nu] = dk_params(alpha, beta, delta);
    return complex_gamma(nu) * complex_gamma(nu - lambda - mu) * reciprocal_gamma(nu - lambda) *
           reciprocal_gamma(nu - mu);
}

Propagator rosen_zener_propagator(double alpha, double delta) {
    ModelSpec::rosen_zener(alpha).validate();
    const Complex a = rosen_zener_a(alpha, delta);
    const Complex b = -kI * std::sin(0.5 * kPi * alpha) / std::cosh(0.5 * kPi * delta);
    return Propagator::normalized(a, b, kGammaModelDefect);
}

Propagator rabi_propagator(double alpha, double delta) {
    ModelSpec::rabi(alpha).validate();
    const double kappa = std::hypot(alpha, delta);
    const double s = std::sin(0.5 * kappa) / kappa;
    const Complex a(std::cos(0.5 * kappa), delta * s);
    const Complex b(0.0, -alpha * s);
    return Propagator::normalized(a, b, kRabiModelDefect);
}

Propagator demkov_kunike_propagator(double alpha, double beta, double delta) {
    ModelSpec::demkov_kunike(alpha, beta).validate();
    const auto [lambda, mu, nu] = dk_params(alpha, beta, delta);
    const Complex a = complex_gamma(nu) * complex_gamma(nu - lambda - mu) *
                      reciprocal_gamma(nu - lambda) * reciprocal_gamma(nu - mu);
    // Transition amplitude from the hypergeometric connection formula in the
    // frame with the symmetric detuning phase integral stripped; the 2^{-i beta}
    // factor carries the tanh chirp's asymptotic phase offset.
    const Complex b = 2.0 * kI * std::exp(-kI * (beta * kLn2)) * complex_gamma(nu) *
                      complex_gamma(lambda + mu - nu + 1.0) * reciprocal_gamma(lambda) *
                      reciprocal_gamma(mu) / alpha;
    return Propagator::normalized(a, b, kGammaModelDefect);
}

Propagator pulse_propagator(const ModelSpec& spec, double delta) {
    if (!std::isfinite(delta) || std::abs(delta) > 100.0)
        throw ValidationError("pulse_propagator: delta must be finite with |delta| <= 100");
    switch (spec.family) {
        case ModelFamily::RosenZener: return rosen_zener_propagator(spec.alpha, delta);
        case ModelFamily::Rabi: return rabi_propagator(spec.alpha, delta);
        case ModelFamily::DemkovKunike:
            return demkov_kunike_propagator(spec.alpha, spec.beta, delta);
    }
    throw ValidationError("pulse_propagator: unknown model family");
}

namespace {

Complex model_a(const ModelSpec& spec, Complex delta) {
    switch (spec.family) {
        case ModelFamily::RosenZener: return rosen_zener_a(spec.alpha, delta);
        case ModelFamily::Rabi: return rabi_a(spec.alpha, delta);
        case ModelFamily::DemkovKunike: return demkov_kunike_a(spec.alpha, spec.beta, delta);
    }
    throw ValidationError("model_a: unknown model family");
}

bool tabulated_case(const ModelSpec& spec) {
    switch (spec.family) {
        case ModelFamily::RosenZener: return close(spec.alpha, 1.0);
        case ModelFamily::Rabi: return close(spec.alpha, kPi);
        case ModelFamily::DemkovKunike: return close(spec.alpha, 2.0) && close(spec.beta, 2.0);
    }
    return false;
}

ModelExpansion tabulated_expansion(const ModelSpec& spec) {
    switch (spec.family) {
        case ModelFamily::RosenZener:
            return ModelExpansion{{Complex(0.0, 0.0), kI * (kPi / 2.0), Complex(kPi * kLn2, 0.0),
                                   -kI * kPi * (kPi * kPi / 24.0 + kLn2 * kLn2)}};
        case ModelFamily::Rabi:
            return ModelExpansion{{Complex(0.0, 0.0), kI / kPi, Complex(-1.0 / (4.0 * kPi), 0.0),
                                   -kI / (2.0 * kPi * kPi * kPi),
                                   Complex(1.0 / (16.0 * kPi * kPi * kPi), 0.0)}};
        case ModelFamily::DemkovKunike:
            return ModelExpansion{
                {Complex(0.086, 0.0), Complex(0.0, 0.165), Complex(-0.052, 0.0), Complex(0.0, 0.036)}};
    }
    throw UnsupportedCase("model_expansion: unknown model family");
}

// Taylor coefficients by trapezoidal evaluation of the Cauchy integral on a
// circle of radius 1/4 (well inside the analyticity disc of every model, so
// the rule converges spectrally).
ModelExpansion numeric_expansion(const ModelSpec& spec) {
    constexpr int kOrder = 5;
    constexpr int kNodes = 64;
    constexpr double kRadius = 0.25;
    std::vector<Complex> samples(kNodes);
    for (int j = 0; j < kNodes; ++j) {
        const double phi = 2.0 * kPi * j / kNodes;
        samples[j] = model_a(spec, kRadius * std::exp(kI * phi));
    }
    std::vector<Complex> coeffs(kOrder + 1);
    double rpow = 1.0;
    for (int k = 0; k <= kOrder; ++k) {
        Complex sum(0.0, 0.0);
        for (int j = 0; j < kNodes; ++j) {
            const double phi = 2.0 * kPi * j * k / kNodes;
            sum += samples[j] * std::exp(-kI * phi);
        }
        coeffs[k] = sum / (static_cast<double>(kNodes) * rpow);
        rpow *= kRadius;
    }
    return ModelExpansion{std::move(coeffs)};
}

} // namespace

ModelExpansion model_expansion(const ModelSpec& spec, ExpansionMethod method) {
    spec.validate();
    switch (method) {
        case ExpansionMethod::Tabulated:
            if (!tabulated_case(spec))
                throw UnsupportedCase("model_expansion: no published coefficients for these parameters");
            return tabulated_expansion(spec);
        case ExpansionMethod::Numeric: return numeric_expansion(spec);
        case ExpansionMethod::Auto:
            return tabulated_case(spec) ? tabulated_expansion(spec) : numeric_expansion(spec);
    }
    throw ValidationError("model_expansion: unknown method");
}

const char* to_string(ModelFamily family) {
    switch (family) {
        case ModelFamily::RosenZener: return "rz";
        case ModelFamily::Rabi: return "rabi";
        case ModelFamily::DemkovKunike: return "dk";
    }
    return "?";
}

ModelFamily family_from_string(const std::string& s) {
    if (s == "rz") return ModelFamily::RosenZener;
    if (s == "rabi") return ModelFamily::Rabi;
    if (s == "dk") return ModelFamily::DemkovKunike;
    throw ValidationError("unknown model family '" + s + "' (expected rz|rabi|dk)");
}

} // namespace pulsesense
