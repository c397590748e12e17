#ifndef PULSESENSE_GAMMA_HPP
#define PULSESENSE_GAMMA_HPP

#include <complex>

namespace pulsesense {

/// Euler gamma function on the complex plane (Lanczos approximation with
/// reflection for Re z < 0.5). Relative error below 1e-13 for |z| <= 50.
/// Throws PoleError when z is a non-positive integer within 1e-12.
std::complex<double> complex_gamma(std::complex<double> z);

/// Entire reciprocal 1/Gamma(z); exactly zero at non-positive integers.
std::complex<double> reciprocal_gamma(std::complex<double> z);

} // namespace pulsesense

#endif
