#ifndef PULSESENSE_SWEEP_HPP
#define PULSESENSE_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pulsesense/models.hpp"
#include "pulsesense/ode.hpp"
#include "pulsesense/su2.hpp"

namespace pulsesense {

enum class Provenance { ClosedForm, OdeOracle };

struct GridPoint {
    double delta;
    double probability;
};

/// Excitation profile P_N(delta) on an ordered detuning grid.
struct SweepProfile {
    ModelSpec model;
    SequenceSpec seq;
    std::vector<GridPoint> grid;
    Provenance provenance = Provenance::ClosedForm;
};

struct SweepOptions {
    int shots = 0;          ///< 0 = exact probabilities; > 0 = binomial sample means
    std::uint64_t seed = 0; ///< base seed for the per-point samplers
    int threads = 0;        ///< 0 = auto; grid points are independent, output order fixed
    IntegrationConfig ode_cfg{};     ///< used for OdeOracle provenance
    double ode_window = 24.0;
};

/// Probability grid over [delta_min, delta_max]; delta = 0 is inserted when
/// the grid misses it. Requires n_points >= 51 and a range containing 0.
SweepProfile sweep(const ModelSpec& spec, const SequenceSpec& seq, double delta_min,
                   double delta_max, int n_points, Provenance provenance = Provenance::ClosedForm,
                   const SweepOptions& opts = {});

enum class FeatureKind { Spike, Dip };

/// Half-width of the central feature plus the matching closed-form estimate
/// where the literature provides one.
struct SensitivityReport {
    double hwhm_dimensionless = 0.0;
    std::optional<double> formula_value;  ///< absent for cases without a published estimate
    FeatureKind feature_kind = FeatureKind::Spike;
    std::optional<double> hwhm_physical_per_second;  ///< set when a pulse width is supplied
};

struct HwhmOptions {
    double max_abs_delta = 0.0;  ///< 0 = default scan range for the family
    double bisect_tol = 1e-9;
    std::optional<double> pulse_width_seconds;
};

/// Published half-width estimate for the tabulated cases (RZ alpha=1,
/// Rabi alpha=pi, DK alpha=beta=2 with alternating phases; RZ same-phase even N).
std::optional<double> paper_formula_hwhm(const ModelSpec& spec, const SequenceSpec& seq);

/// Innermost |delta| where the exact profile crosses the absolute half level
/// P = 1/2, located by outward marching plus bisection on the closed form.
SensitivityReport hwhm(const ModelSpec& spec, const SequenceSpec& seq, const HwhmOptions& opts = {});

/// Same, scanning within the profile's grid extent.
SensitivityReport hwhm(const SweepProfile& profile, const HwhmOptions& opts = {});

/// Small-detuning approximation of the profile for the tabulated cases,
/// clamped to [0, 1]. Throws UnsupportedCase otherwise (including every
/// same-phase Demkov-Kunike and Rabi sequence).
double approx_profile(const ModelSpec& spec, const SequenceSpec& seq, double delta);

/// Converts a dimensionless half-width into s^-1 for a pulse of width
/// pulse_width_seconds.
double physical_sensitivity(double hwhm_dimensionless, double pulse_width_seconds);

const char* to_string(PhaseMode mode);
PhaseMode phase_mode_from_string(const std::string& s);
const char* to_string(FeatureKind kind);
const char* to_string(Provenance p);

/// Default figure-axis range for the family (|delta| <= 4 for RZ/Rabi, 6 for DK).
double default_scan_range(const ModelSpec& spec);

} // namespace pulsesense

#endif
