#include "pulsesense/gamma.hpp"

#include <cmath>
#include <numbers>

#include "pulsesense/errors.hpp"

namespace pulsesense {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 607/128 (15 terms).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// Core approximation, valid for Re z >= 0.5.
Complex lanczos_gamma(Complex z) {
    const Complex x = z - 1.0;
    Complex series(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k) series += kLanczos[k] / (x + static_cast<double>(k));
    const Complex t = x + (kLanczosG + 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * series;
}

bool near_nonpositive_integer(Complex z, double tol) {
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z - Complex(r, 0.0)) <= tol;
}

} // namespace

Complex complex_gamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("complex_gamma: pole at non-positive integer");
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    return lanczos_gamma(z);
}

Complex reciprocal_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 0.0)
        return Complex(0.0, 0.0);
    if (z.real() < 0.5) return std::sin(kPi * z) * lanczos_gamma(1.0 - z) / kPi;
    return 1.0 / lanczos_gamma(z);
}

} // namespace pulsesense
