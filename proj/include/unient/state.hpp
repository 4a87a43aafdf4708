#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "unient/partition.hpp"

namespace unient {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
/// Local dimension of each party, party 0 being the most significant tensor factor.
using Dims = std::vector<std::size_t>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
/// Eigenvalues in [-kNegativeEigenvalueTolerance, 0) are treated as rounding noise.
inline constexpr double kNegativeEigenvalueTolerance = 1e-9;
/// Eigenvalues at or below this value are outside the support.
inline constexpr double kSupportThreshold = 1e-12;
/// Squared Schmidt coefficients at or below this value are dropped by pure-state measures.
inline constexpr double kSchmidtWeightFloor = 1e-30;

std::size_t total_dimension(const Dims& dims);

class DensityMatrix;

class PureState {
 public:
  /// Throws DomainError unless the norm is 1 within kNormTolerance and dims match.
  PureState(Vector amplitudes, Dims dims);
  /// Rescales to unit norm; throws on a zero vector.
  static PureState normalized(Vector amplitudes, Dims dims);
  /// Computational basis product state |digits[0] digits[1] ...>.
  static PureState basis(Dims dims, const std::vector<std::size_t>& digits);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }

  DensityMatrix density() const;

 private:
  Vector amplitudes_;
  Dims dims_;
};

/// Eigen-decomposition with eigenvalues in descending order.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;  // columns, matching `eigenvalues`
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity. Small negative eigenvalues
  /// are clamped to zero and the cached spectrum renormalized to sum 1.
  DensityMatrix(Matrix matrix, Dims dims);
  static DensityMatrix maximally_mixed(Dims dims);
  static DensityMatrix diagonal(const std::vector<double>& weights, Dims dims);

  const Matrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t parties() const noexcept { return dims_.size(); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

  const Spectrum& spectrum() const noexcept { return spectrum_; }
  std::size_t rank() const;
  bool is_pure() const { return rank() == 1; }

 private:
  Matrix matrix_;
  Dims dims_;
  Spectrum spectrum_;
};

DensityMatrix partial_trace(const PureState& state, const std::vector<std::size_t>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

Spectrum spectral_decompose(const DensityMatrix& rho);
/// Eigen-decomposition of an arbitrary Hermitian matrix; throws when the input
/// deviates from Hermitian by more than kHermitianTolerance.
Spectrum spectral_decompose(const Matrix& hermitian);

/// Spectral power. Zero eigenvalues stay zero, so negative exponents give the
/// inverse on the support.
Matrix matrix_power(const DensityMatrix& rho, double exponent);
Matrix matrix_power(const Spectrum& spectrum, double exponent);

/// Sum of eigenvalue^x over the support; exactly 1 for rank-one spectra.
double trace_power(const DensityMatrix& rho, double x);
double trace_power(const RealVector& eigenvalues, double x);

/// Descending nonzero Schmidt coefficients across a two-block cover.
RealVector schmidt_coefficients(const PureState& state, const Partition& bipartition);

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

// Unchecked kernels shared by the measure modules.
namespace kernel {

/// Reorders tensor factors: factor i of the result is factor order[i] of the input.
Vector permute_parties(const Vector& psi, const Dims& dims, const std::vector<std::size_t>& order);
/// Reduced density matrix of the kept parties (kept in ascending order).
Matrix reduced_density(const Vector& psi, const Dims& dims, const std::vector<std::size_t>& keep);
/// Squared Schmidt coefficients across block | rest, from an SVD of the amplitude
/// matrix. Small weights keep full absolute accuracy, unlike eigenvalues of the
/// reduced state.
RealVector schmidt_weights(const Vector& psi, const Dims& dims, const std::vector<std::size_t>& block);
/// Sum of w^x over weights above kSchmidtWeightFloor; exactly 1 when at most one survives.
double weight_trace_power(const RealVector& weights, double x);
/// Applies `op` to tensor factor `factor`.
Vector apply_on_factor(const Vector& psi, const Dims& dims, std::size_t factor, const Matrix& op);
/// Descending eigenvalues of a Hermitian matrix, negatives clipped to zero.
RealVector hermitian_eigenvalues(const Matrix& hermitian);

}  // namespace kernel

}  // namespace unient
