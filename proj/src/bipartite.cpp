#include "unient/bipartite.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "unient/errors.hpp"

namespace unient {

namespace {

void check_bipartition(const Partition& bipartition, std::size_t parties) {
  if (bipartition.size() != 2 || bipartition.universe() != parties || !bipartition.covers_universe())
    throw DomainError("expected a two-block cover of the " + std::to_string(parties) + " parties, got " +
                      bipartition.to_string());
}

std::size_t block_dimension(const Dims& dims, const Block& block) {
  std::size_t d = 1;
  for (auto i : block) d *= dims[i];
  return d;
}

// The side with the smaller local dimension gives the cheaper reduced state.
const Block& smaller_side(const Partition& bipartition, const Dims& dims) {
  const auto& b = bipartition.blocks();
  return block_dimension(dims, b[0]) <= block_dimension(dims, b[1]) ? b[0] : b[1];
}

}  // namespace

double entanglement_from_amplitudes(const Vector& psi, const Dims& dims, const Block& side, const MeasureParams& p) {
  return unified_from_trace(kernel::weight_trace_power(kernel::schmidt_weights(psi, dims, side), p.a()), p);
}

double entanglement_pure(const PureState& state, const Partition& bipartition, const MeasureParams& p) {
  check_bipartition(bipartition, state.parties());
  return entanglement_from_amplitudes(state.amplitudes(), state.dims(), smaller_side(bipartition, state.dims()), p);
}

double binary_reduced_function(double lambda, const MeasureParams& p) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("Schmidt weight must lie in [0, 1]");
  if (lambda == 0.0 || lambda == 1.0) return 0.0;
  return unified_from_trace(std::pow(lambda, p.a()) + std::pow(1.0 - lambda, p.a()), p);
}

double concurrence_two_qubit(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw DomainError("concurrence_two_qubit needs dims (2, 2)");
  Matrix flip = Matrix::Zero(4, 4);
  // sigma_y x sigma_y
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Matrix root = matrix_power(rho, 0.5);
  const Matrix product = root * flip * root.conjugate() * flip;
  Eigen::JacobiSVD<Matrix> svd(product);
  const RealVector& s = svd.singularValues();
  const double c = s(0) - s(1) - s(2) - s(3);
  // Rounding leaves ~1e-16 residue on the separable boundary.
  return c < kConcurrenceFloor ? 0.0 : c;
}

double concurrence_pure_unscaled(const PureState& state, const Partition& bipartition) {
  check_bipartition(bipartition, state.parties());
  const Matrix reduced = kernel::reduced_density(state.amplitudes(), state.dims(), bipartition.blocks()[0]);
  const double purity = trace_power(kernel::hermitian_eigenvalues(reduced), 2.0);
  return std::sqrt(std::max(0.0, 1.0 - purity));
}

double two_qubit_measure(const DensityMatrix& rho, const MeasureParams& p) {
  const double c = concurrence_two_qubit(rho);
  if (c == 0.0) return 0.0;
  const double lambda = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return binary_reduced_function(std::min(lambda, 1.0), p);
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner weight must lie in [0, 1]");
  Matrix bell = Matrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  Matrix rho = p * bell + (1.0 - p) * 0.25 * Matrix::Identity(4, 4);
  return DensityMatrix(std::move(rho), {2, 2});
}

bool is_entangled(const PureState& state, const Partition& bipartition) {
  const RealVector coeffs = schmidt_coefficients(state, bipartition);
  return (coeffs.array() > 1e-9).count() > 1;
}

double OrderingTriple::margin() const { return std::min(qs_inverse_s - qs, rt_inverse - qs_inverse_s); }

OrderingTriple parameter_ordering_triple(const PureState& state, double q, double s,
                                         std::optional<Partition> bipartition) {
  if (!(q >= s && s > 1.0)) throw DomainError("ordering triple needs q >= s > 1");
  const Partition cut = bipartition.value_or(Partition::bipartition({0}, state.parties()));
  OrderingTriple out;
  out.qs = entanglement_pure(state, cut, MeasureParams::qs(q, s));
  out.qs_inverse_s = entanglement_pure(state, cut, MeasureParams::qs(q, 1.0 / s));
  out.rt_inverse = entanglement_pure(state, cut, MeasureParams::rt(1.0 / q, 1.0 / s));
  out.entangled = is_entangled(state, cut);
  return out;
}

}  // namespace unient
