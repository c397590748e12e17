#ifndef PULSESENSE_ESTIMATOR_HPP
#define PULSESENSE_ESTIMATOR_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pulsesense/models.hpp"
#include "pulsesense/su2.hpp"

namespace pulsesense {

/// One measured sequence population.
struct MeasurementRecord {
    SequenceSpec seq;
    double probability;
    double weight = 1.0;
};

/// Populations measured with a known pulse family whose detuning is unknown.
struct MeasurementSet {
    ModelSpec model;
    std::vector<MeasurementRecord> records;

    void validate() const;
};

struct Candidate {
    double delta;
    double residual;
};

struct DetuningEstimate {
    double delta_hat = 0.0;
    double residual = 0.0;
    /// Local minima whose residual is within 2x of the best.
    std::vector<Candidate> candidates;
    std::array<double, 2> search_range{0.0, 0.0};
    /// More than one candidate survived. The closed-form profiles of all three
    /// families are even in delta, so exact records always leave a +-delta pair.
    bool ambiguous = false;
};

struct EstimateOptions {
    double residual_ceiling = 0.25;
    int grid_nodes = 801;      ///< coarse global scan before refinement (>= 400)
    double refine_tol = 1e-6;  ///< golden-section width on delta
};

/// Forward model: exact sequence probability at the given detuning.
double predict(const ModelSpec& spec, const SequenceSpec& seq, double delta);

/// Weighted least-squares inversion of the records over the search range:
/// coarse grid scan, golden-section refinement of every local basin, candidate
/// pruning. Throws NoFit when the best residual exceeds the ceiling.
DetuningEstimate estimate(const MeasurementSet& measurements,
                          std::array<double, 2> search_range = {-0.5, 0.5},
                          const EstimateOptions& opts = {});

/// Finite-shot measurement simulation; shots = 0 returns the exact value,
/// otherwise a seeded binomial sample mean (deterministic per seed).
double simulate_measurement(const PulseModel& model, const SequenceSpec& seq, int shots,
                            std::uint64_t seed);

} // namespace pulsesense

#endif
