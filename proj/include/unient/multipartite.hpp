#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unient/convex_roof.hpp"
#include "unient/entropy.hpp"
#include "unient/partition.hpp"
#include "unient/state.hpp"

namespace unient {

/// Global measures over the blocks of a partition.
///  Sum forms: [m - sum_j (tr rho_j^a)^b] / (2 (a - 1) b) over the m blocks.
///  Prod forms: [1 - T^b] / ((a - 1) b) with T = <psi| (x)_j rho_j^((a-1)/2) |psi>.
enum class GlobalForm { SumQS, SumRT, ProdQS, ProdRT };

std::string to_string(GlobalForm form);

class GlobalMeasureKind {
 public:
  /// Throws DomainError when the parameter family does not match the form.
  GlobalMeasureKind(GlobalForm form, MeasureParams params);
  GlobalForm form() const noexcept { return form_; }
  const MeasureParams& params() const noexcept { return params_; }
  bool is_sum() const noexcept { return form_ == GlobalForm::SumQS || form_ == GlobalForm::SumRT; }
  std::string to_string() const;

 private:
  GlobalForm form_;
  MeasureParams params_;
};

/// Pure-state value with the blocks of `partition` (a cover of all parties) as parties.
/// Exactly 0 when every block is in a pure reduced state.
double global_measure_pure(const PureState& state, const Partition& partition, const GlobalMeasureKind& kind);

/// <psi| (x)_j rho_j^exponent |psi>, powers taken on each block's support.
double product_expectation(const PureState& state, const Partition& partition, double exponent);

struct FidelityReduction {
  double lhs = 0.0;  // Prod form, QS(3, 1), finest partition
  double rhs = 0.0;  // (1 - <psi| (x)_j rho_j |psi>) / 2
};
FidelityReduction fidelity_reduction_check(const PureState& state);

struct GenuineValue {
  double value = 0.0;
  Partition minimizer;  // first minimizing bipartition in canonical order
};

/// Minimum of the reduced function over all two-block cuts.
GenuineValue genuine_measure_pure(const PureState& state, const MeasureParams& p);

/// Minimum over two-block cuts of sqrt(2 (1 - tr rho_X^2)).
GenuineValue genuine_concurrence(const PureState& state);

/// Extremum of (tr rho^a)^b over d-dimensional states, reached at I/d:
/// d^(-(q-1)s) for QS, d^((1-r)t) for RT.
double extremal_constant(std::size_t d, const MeasureParams& p);

struct GenuineLowerBounds {
  /// sum over two-block cuts of E + (2^(n-1) - 2)(K - 1) / ((a - 1) b)
  double bipartition_sum = 0.0;
  /// 2 E_sum(finest) + (n - 1)(K - 1) / ((a - 1) b)
  double global_sum = 0.0;
};

/// Both lower bounds on the genuine measure; K is the extremal constant.
/// Requires a common local dimension.
GenuineLowerBounds genuine_lower_bounds(const PureState& state, const MeasureParams& p);

PureFunctional global_functional(const Dims& dims, const Partition& partition, const GlobalMeasureKind& kind);
PureFunctional genuine_functional(const Dims& dims, const MeasureParams& p);

/// Roof upper bounds for mixed inputs.
RoofResult global_measure_mixed(const DensityMatrix& rho, const Partition& partition, const GlobalMeasureKind& kind,
                                const RoofConfig& cfg);
RoofResult genuine_measure_mixed(const DensityMatrix& rho, const MeasureParams& p, const RoofConfig& cfg);

struct PartitionValue {
  double value = 0.0;
  /// False when the value is a roof upper bound on a mixed marginal.
  bool exact = true;
};

/// Global measure of the subsystem a partition describes. Blocks not covering
/// every party refer to the reduced state on their support.
PartitionValue measure_on_partition(const PureState& state, const Partition& partition,
                                    const GlobalMeasureKind& kind, const RoofConfig& cfg);

struct MonogamyScan {
  PartitionValue finer;
  PartitionValue coarser;
  double equality_gap = 0.0;  // finer - coarser
  std::vector<std::pair<Partition, PartitionValue>> residual_set;
  double residual_max = 0.0;
};

/// Data for the complete-monogamy implication on one coarsening step: how far
/// the measure moves, and the largest value over the residual set.
MonogamyScan complete_monogamy_scan(const PureState& state, const Partition& finer, const Partition& coarser,
                                    const GlobalMeasureKind& kind, const RoofConfig& cfg);

}  // namespace unient
