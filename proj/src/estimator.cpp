#include "pulsesense/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "pulsesense/errors.hpp"
#include "pulsesense/rng.hpp"

namespace pulsesense {

void MeasurementSet::validate() const {
    model.validate();
    if (records.empty()) throw ValidationError("MeasurementSet: at least one record required");
    for (const auto& r : records) {
        if (!(r.probability >= 0.0 && r.probability <= 1.0))
            throw ValidationError("MeasurementSet: probabilities must lie in [0, 1]");
        if (!(r.weight > 0.0)) throw ValidationError("MeasurementSet: weights must be > 0");
    }
}

double predict(const ModelSpec& spec, const SequenceSpec& seq, double delta) {
    return sequence_probability(pulse_propagator(spec, delta), seq);
}

namespace {

double loss(const MeasurementSet& m, double delta) {
    // one single-pulse propagator serves every record
    const Propagator u = pulse_propagator(m.model, delta);
    double sum = 0.0;
    for (const auto& r : m.records) {
        const double diff = sequence_probability(u, r.seq) - r.probability;
        sum += r.weight * diff * diff;
    }
    return sum;
}

Candidate golden_refine(const MeasurementSet& m, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = loss(m, x1);
    double f2 = loss(m, x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = loss(m, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = loss(m, x2);
        }
    }
    const double x = 0.5 * (lo + hi);
    return Candidate{x, loss(m, x)};
}

} // namespace

DetuningEstimate estimate(const MeasurementSet& measurements, std::array<double, 2> search_range,
                          const EstimateOptions& opts) {
    measurements.validate();
    const double lo = search_range[0];
    const double hi = search_range[1];
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo >= hi)
        throw ValidationError("estimate: search range must be finite with lo < hi");
    const int nodes = std::max(opts.grid_nodes, 400);

    std::vector<double> xs(nodes);
    std::vector<double> fs(nodes);
    for (int k = 0; k < nodes; ++k) {
        xs[k] = (lo * (nodes - 1 - k) + hi * k) / (nodes - 1);
        fs[k] = loss(measurements, xs[k]);
    }

    // refine every grid-local basin (endpoints count when the loss slides
    // toward them)
    std::vector<Candidate> found;
    for (int k = 0; k < nodes; ++k) {
        const bool left_ok = k == 0 || fs[k] <= fs[k - 1];
        const bool right_ok = k == nodes - 1 || fs[k] <= fs[k + 1];
        if (!left_ok || !right_ok) continue;
        const double a = xs[std::max(0, k - 1)];
        const double b = xs[std::min(nodes - 1, k + 1)];
        found.push_back(golden_refine(measurements, a, b, opts.refine_tol));
    }
    if (found.empty()) throw InternalError("estimate: no local minimum on the grid");

    // merge refinements that collapsed into one basin
    std::sort(found.begin(), found.end(),
              [](const Candidate& x, const Candidate& y) { return x.delta < y.delta; });
    std::vector<Candidate> merged;
    for (const auto& c : found) {
        if (!merged.empty() && std::abs(c.delta - merged.back().delta) < 5.0 * opts.refine_tol) {
            if (c.residual < merged.back().residual) merged.back() = c;
        } else {
            merged.push_back(c);
        }
    }

    const double best =
        std::min_element(merged.begin(), merged.end(), [](const Candidate& x, const Candidate& y) {
            return x.residual < y.residual;
        })->residual;
    if (best > opts.residual_ceiling)
        throw NoFit("estimate: best residual exceeds the configured ceiling");

    const double keep = std::max(2.0 * best, best + 1e-15);
    std::vector<Candidate> survivors;
    for (const auto& c : merged)
        if (c.residual <= keep) survivors.push_back(c);

    // deterministic order: residual, then |delta|, non-negative sign first
    std::sort(survivors.begin(), survivors.end(), [](const Candidate& x, const Candidate& y) {
        if (x.residual != y.residual) return x.residual < y.residual;
        if (std::abs(x.delta) != std::abs(y.delta)) return std::abs(x.delta) < std::abs(y.delta);
        return x.delta > y.delta;
    });

    DetuningEstimate out;
    out.delta_hat = survivors.front().delta;
    out.residual = survivors.front().residual;
    out.candidates = std::move(survivors);
    out.search_range = search_range;
    out.ambiguous = out.candidates.size() > 1;
    return out;
}

double simulate_measurement(const PulseModel& model, const SequenceSpec& seq, int shots,
                            std::uint64_t seed) {
    const double p = predict(model.spec, seq, model.delta);
    return binomial_mean(p, shots, seed);
}

} // namespace pulsesense
