#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "unient/entropy.hpp"
#include "unient/partition.hpp"
#include "unient/random.hpp"
#include "unient/state.hpp"

namespace unient {

/// Pure-state ensemble {p_j, psi_j} realizing a mixed state.
struct EnsembleDecomposition {
  std::vector<double> probs;
  std::vector<PureState> states;

  std::size_t size() const noexcept { return probs.size(); }
  Matrix reconstruct() const;
  /// Largest entrywise deviation of the reconstruction from rho.
  double reconstruction_error(const DensityMatrix& rho) const;
};

/// Ensemble reconstructions must match the target this closely.
inline constexpr double kEnsembleTolerance = 1e-8;

struct RoofConfig {
  std::size_t ensemble_size = 0;  // 0 selects rank^2
  std::size_t restarts = 20;      // random starts on top of the eigen-ensemble start and warm starts
  std::size_t max_iterations = 1000;  // sweeps per start
  double tolerance = 1e-6;           // sweep improvement below which the step is refined
  RngConfig rng{};
  std::size_t threads = 1;
  /// Extra starting ensembles, tried before the random starts.
  std::vector<EnsembleDecomposition> warm_starts;
};

struct RoofResult {
  double value = 0.0;
  EnsembleDecomposition witness;
  bool iterations_exhausted = false;
  /// 0 is the eigen-ensemble start, then warm starts, then random starts.
  std::size_t best_start = 0;
};

/// Measure evaluated on a unit vector.
using PureFunctional = std::function<double(const Vector&)>;

/// Entanglement across `bipartition` as a PureFunctional.
PureFunctional bipartite_functional(const Dims& dims, const Partition& bipartition, const MeasureParams& p);

/// Minimizes the ensemble average of `functional` by local search over
/// ensembles. The value is always the exact average over the returned witness,
/// hence an upper bound on the roof.
RoofResult convex_roof_estimate(const DensityMatrix& rho, const PureFunctional& functional, const RoofConfig& cfg);
RoofResult convex_roof_estimate(const DensityMatrix& rho, const Partition& bipartition, const MeasureParams& p,
                                const RoofConfig& cfg);

struct RoofGapReport {
  double estimate = 0.0;
  std::optional<double> oracle;
  std::optional<double> gap;
};

/// Estimate across {party 0} | rest, with the concurrence closed form as oracle for two qubits.
RoofGapReport roof_gap_report(const DensityMatrix& rho, const MeasureParams& p, const RoofConfig& cfg);

}  // namespace unient
