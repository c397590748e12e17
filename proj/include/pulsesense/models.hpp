#ifndef PULSESENSE_MODELS_HPP
#define PULSESENSE_MODELS_HPP

#include <complex>
#include <vector>

#include "pulsesense/su2.hpp"

namespace pulsesense {

enum class ModelFamily { RosenZener, Rabi, DemkovKunike };

/// Pulse family plus its dimensionless shape parameters (detuning excluded).
/// alpha = peak Rabi frequency times pulse width (Omega0*T); beta = chirp
/// amplitude times pulse width (B*T), Demkov-Kunike only.
struct ModelSpec {
    ModelFamily family;
    double alpha;
    double beta;

    static ModelSpec rosen_zener(double alpha);
    static ModelSpec rabi(double alpha);
    static ModelSpec demkov_kunike(double alpha, double beta);

    void validate() const;
};

/// A concrete pulse: model parameters plus the static detuning delta = Delta0*T.
struct PulseModel {
    ModelSpec spec;
    double delta;

    PulseModel(ModelSpec s, double d);
};

/// Cayley-Klein a parameter continued to complex detuning (used for Taylor
/// coefficient extraction; unitarity holds only on the real axis).
Complex rosen_zener_a(double alpha, Complex delta);
Complex rabi_a(double alpha, Complex delta);
Complex demkov_kunike_a(double alpha, double beta, Complex delta);

Propagator rosen_zener_propagator(double alpha, double delta);
Propagator rabi_propagator(double alpha, double delta);
Propagator demkov_kunike_propagator(double alpha, double beta, double delta);

Propagator pulse_propagator(const ModelSpec& spec, double delta);
inline Propagator pulse_propagator(const PulseModel& m) { return pulse_propagator(m.spec, m.delta); }

/// Taylor coefficients of a(delta) around delta = 0; coefficients[k] is the
/// coefficient of delta^k.
struct ModelExpansion {
    std::vector<Complex> coefficients;
};

enum class ExpansionMethod {
    Auto,       ///< tabulated when the parameters match a published case, else numeric
    Tabulated,  ///< published coefficients only; UnsupportedCase otherwise
    Numeric,    ///< Cauchy-integral differentiation of the closed form
};

ModelExpansion model_expansion(const ModelSpec& spec, ExpansionMethod method = ExpansionMethod::Auto);

const char* to_string(ModelFamily family);
ModelFamily family_from_string(const std::string& s);

} // namespace pulsesense

#endif
