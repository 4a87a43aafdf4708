#pragma once

#include <optional>

#include "unient/entropy.hpp"
#include "unient/partition.hpp"
#include "unient/state.hpp"

namespace unient {

/// Unified entropy of either reduced state across a two-block cover.
double entanglement_pure(const PureState& state, const Partition& bipartition, const MeasureParams& p);

/// Same value from raw normalized amplitudes; no validation.
double entanglement_from_amplitudes(const Vector& psi, const Dims& dims, const Block& side, const MeasureParams& p);

/// Reduced function of a two-level reduced state with spectrum (lambda, 1 - lambda).
double binary_reduced_function(double lambda, const MeasureParams& p);

/// Concurrence values below this are reported as exactly 0.
inline constexpr double kConcurrenceFloor = 1e-12;

/// Spin-flip concurrence max{0, s1 - s2 - s3 - s4}, s_i the singular values of
/// sqrt(rho) (Y x Y) sqrt(rho)^* (Y x Y) in descending order.
double concurrence_two_qubit(const DensityMatrix& rho);

/// sqrt(1 - tr rho_A^2). Differs from the usual pure-state concurrence by a factor sqrt(2).
double concurrence_pure_unscaled(const PureState& state, const Partition& bipartition);

/// Two-qubit convex-roof value through the concurrence:
/// binary_reduced_function((1 + sqrt(1 - C^2)) / 2). Rejects anything but dims (2, 2).
double two_qubit_measure(const DensityMatrix& rho, const MeasureParams& p);

/// p |Phi+><Phi+| + (1 - p) I / 4.
DensityMatrix werner_state(double p);

/// More than one Schmidt coefficient above 1e-9.
bool is_entangled(const PureState& state, const Partition& bipartition);

struct OrderingTriple {
  double qs = 0.0;            // E with (q, s)
  double qs_inverse_s = 0.0;  // E with (q, 1/s)
  double rt_inverse = 0.0;    // E with (1/q, 1/s)
  bool entangled = false;

  /// Smallest of the two consecutive gaps.
  double margin() const;
};

/// Evaluates the three measures whose strict ordering is expected for entangled
/// states when q >= s > 1. Defaults to the cut {party 0} | rest.
OrderingTriple parameter_ordering_triple(const PureState& state, double q, double s,
                                         std::optional<Partition> bipartition = std::nullopt);

}  // namespace unient
