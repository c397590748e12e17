#ifndef PULSESENSE_IO_HPP
#define PULSESENSE_IO_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pulsesense/estimator.hpp"
#include "pulsesense/sweep.hpp"

#include "json.hpp"

namespace pulsesense {

/// Full-precision decimal form of a double (17 significant digits, %.17g).
std::string format_double(double x);

/// Paper-convention kHz display of a sensitivity in s^-1 (4500 -> "4.5 kHz").
std::string format_khz(double per_second);

// ---- profiles ----------------------------------------------------------

/// Header: delta,probability,N,phase_mode,model
void write_profile_csv(std::ostream& os, const SweepProfile& profile);
SweepProfile read_profile_csv(std::istream& is);

nlohmann::json profile_to_json(const SweepProfile& profile, const SweepOptions& opts);
SweepProfile profile_from_json(const nlohmann::json& j);

// ---- measurements ------------------------------------------------------

/// CSV with header N,phase_mode,probability[,weight]; weight defaults to 1.
MeasurementSet parse_measurements_csv(std::istream& is, const ModelSpec& model);
void write_measurements_csv(std::ostream& os, const std::vector<MeasurementRecord>& records);

// ---- reports -----------------------------------------------------------

nlohmann::json sensitivity_to_json(const SensitivityReport& report, const ModelSpec& spec,
                                   const SequenceSpec& seq,
                                   std::optional<double> pulse_width_seconds);
nlohmann::json estimate_to_json(const DetuningEstimate& est, const ModelSpec& spec,
                                std::optional<double> pulse_width_seconds);

// ---- figure recipes ----------------------------------------------------

enum class SeriesKind { Exact, Approx, Reference };

struct FigureSeries {
    std::string label;
    SeriesKind kind;
    int n_pulses;        ///< 1 for the single-pulse reference curves
    PhaseMode mode;      ///< Same for reference curves
    std::vector<GridPoint> grid;
};

struct FigureData {
    std::string id;
    ModelSpec model;
    std::vector<FigureSeries> series;
};

const std::vector<std::string>& figure_ids();

/// Profile bundles reproducing the published detuning-scan figures.
FigureData make_figure(const std::string& id, int n_points = 801);

void write_figure_csv(std::ostream& os, const FigureData& fig);
nlohmann::json figure_to_json(const FigureData& fig);

// ---- verification runs -------------------------------------------------

struct VerifyCheck {
    std::string name;
    double max_deviation;
    double threshold;
    bool passed;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed = true;
};

struct VerifyOptions {
    std::set<std::string> only;  ///< subset of {"su2", "ode", "expansion"}; empty = all
    double ode_tol = 1e-11;      ///< relative tolerance handed to the integrator
    double ode_window = 24.0;
    std::uint64_t seed = 1;
};

VerifyReport run_verify(const VerifyOptions& opts);
nlohmann::json verify_to_json(const VerifyReport& report, const VerifyOptions& opts);

} // namespace pulsesense

#endif
