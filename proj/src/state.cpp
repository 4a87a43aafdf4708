#include "unient/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "unient/errors.hpp"

namespace unient {

std::size_t total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

namespace {

void check_dims(const Dims& dims, std::size_t expected) {
  if (dims.empty()) throw DomainError("dims must name at least one party");
  for (auto d : dims)
    if (d == 0) throw DomainError("local dimensions must be positive");
  if (total_dimension(dims) != expected)
    throw DomainError("product of dims (" + std::to_string(total_dimension(dims)) +
                      ") does not match state dimension " + std::to_string(expected));
}

std::vector<std::size_t> checked_keep(std::vector<std::size_t> keep, std::size_t parties) {
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw DomainError("partial trace: repeated party index");
  if (keep.empty() || keep.size() >= parties)
    throw DomainError("partial trace: keep set must be a nonempty proper subset of the parties");
  if (keep.back() >= parties) throw DomainError("partial trace: party index out of range");
  return keep;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& keep, std::size_t parties) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < parties; ++i)
    if (!std::binary_search(keep.begin(), keep.end(), i)) rest.push_back(i);
  return rest;
}

Dims select(const Dims& dims, const std::vector<std::size_t>& idx) {
  Dims out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(dims[i]);
  return out;
}

Spectrum descending_eigen(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  if (solver.info() != Eigen::Success) throw DomainError("eigen-decomposition failed to converge");
  const auto n = hermitian.rows();
  Spectrum out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

double hermitian_deviation(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(Vector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  check_dims(dims_, dimension());
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance)
    throw DomainError("pure state must have unit norm (norm = " + std::to_string(amplitudes_.norm()) + ")");
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw DomainError("cannot normalize a zero vector");
  amplitudes /= n;
  return PureState(std::move(amplitudes), std::move(dims));
}

PureState PureState::basis(Dims dims, const std::vector<std::size_t>& digits) {
  if (digits.size() != dims.size()) throw DomainError("basis state needs one digit per party");
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] >= dims[i]) throw DomainError("basis digit exceeds local dimension");
    index = index * dims[i] + digits[i];
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v), std::move(dims));
}

DensityMatrix PureState::density() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), dims_);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Matrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() != matrix_.cols()) throw DomainError("density matrix must be square");
  check_dims(dims_, dimension());
  if (hermitian_deviation(matrix_) > kHermitianTolerance) throw DomainError("density matrix is not Hermitian");
  const cplx tr = matrix_.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance)
    throw DomainError("density matrix must have unit trace (trace = " + std::to_string(tr.real()) + ")");
  matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();

  spectrum_ = descending_eigen(matrix_);
  auto& ev = spectrum_.eigenvalues;
  if (ev.size() > 0 && ev(ev.size() - 1) < -kNegativeEigenvalueTolerance)
    throw DomainError("density matrix is not positive semidefinite (min eigenvalue " +
                      std::to_string(ev(ev.size() - 1)) + ")");
  ev = ev.cwiseMax(0.0);
  ev /= ev.sum();
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
  const auto d = static_cast<Eigen::Index>(total_dimension(dims));
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d), std::move(dims));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& weights, Dims dims) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(weights.size()), static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weights[i];
  return DensityMatrix(std::move(m), std::move(dims));
}

std::size_t DensityMatrix::rank() const {
  return static_cast<std::size_t>((spectrum_.eigenvalues.array() > kSupportThreshold).count());
}

// ---------------------------------------------------------------------------
// Kernels

namespace kernel {

Vector permute_parties(const Vector& psi, const Dims& dims, const std::vector<std::size_t>& order) {
  const std::size_t n = dims.size();
  Dims new_dims = select(dims, order);
  std::vector<std::size_t> old_stride(n), new_stride(n);
  for (std::size_t i = n, s = 1; i-- > 0;) {
    old_stride[i] = s;
    s *= dims[i];
  }
  for (std::size_t i = n, s = 1; i-- > 0;) {
    new_stride[i] = s;
    s *= new_dims[i];
  }
  // stride, in the old layout, of each new factor
  std::vector<std::size_t> mapped(n);
  for (std::size_t i = 0; i < n; ++i) mapped[i] = old_stride[order[i]];

  Vector out(psi.size());
  std::vector<std::size_t> digit(n, 0);
  std::size_t old_index = 0;
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    out(k) = psi(static_cast<Eigen::Index>(old_index));
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < new_dims[i]) {
        old_index += mapped[i];
        break;
      }
      old_index -= (new_dims[i] - 1) * mapped[i];
      digit[i] = 0;
    }
  }
  return out;
}

Matrix reduced_density(const Vector& psi, const Dims& dims, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> order = keep;
  const auto rest = complement(keep, dims.size());
  order.insert(order.end(), rest.begin(), rest.end());
  const bool identity_order = std::is_sorted(order.begin(), order.end());
  const Vector permuted = identity_order ? psi : permute_parties(psi, dims, order);
  const auto dk = static_cast<Eigen::Index>(total_dimension(select(dims, keep)));
  const auto dr = static_cast<Eigen::Index>(psi.size()) / dk;
  Eigen::Map<const Matrix> n(permuted.data(), dr, dk);
  return n.transpose() * n.conjugate();
}

RealVector schmidt_weights(const Vector& psi, const Dims& dims, const std::vector<std::size_t>& block) {
  std::vector<std::size_t> order = block;
  const auto rest = complement(block, dims.size());
  order.insert(order.end(), rest.begin(), rest.end());
  const bool identity_order = std::is_sorted(order.begin(), order.end());
  const Vector permuted = identity_order ? psi : permute_parties(psi, dims, order);
  const auto dk = static_cast<Eigen::Index>(total_dimension(select(dims, block)));
  const auto dr = static_cast<Eigen::Index>(psi.size()) / dk;
  Eigen::Map<const Matrix> n(permuted.data(), dr, dk);
  Eigen::JacobiSVD<Matrix> svd(n);
  return svd.singularValues().array().square();
}

double weight_trace_power(const RealVector& weights, double x) {
  double sum = 0.0;
  int count = 0;
  for (auto w : weights)
    if (w > kSchmidtWeightFloor) {
      sum += std::pow(w, x);
      ++count;
    }
  return count <= 1 ? 1.0 : sum;
}

Vector apply_on_factor(const Vector& psi, const Dims& dims, std::size_t factor, const Matrix& op) {
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < factor; ++i) left *= dims[i];
  for (std::size_t i = factor + 1; i < dims.size(); ++i) right *= dims[i];
  const auto d = static_cast<Eigen::Index>(dims[factor]);
  const auto r = static_cast<Eigen::Index>(right);
  Vector out(psi.size());
  for (std::size_t l = 0; l < left; ++l) {
    const auto offset = static_cast<Eigen::Index>(l) * d * r;
    Eigen::Map<const Matrix> block(psi.data() + offset, r, d);
    Eigen::Map<Matrix> target(out.data() + offset, r, d);
    target.noalias() = block * op.transpose();
  }
  return out;
}

RealVector hermitian_eigenvalues(const Matrix& h) {
  const auto n = h.rows();
  RealVector ev(n);
  if (n == 1) {
    ev(0) = h(0, 0).real();
  } else if (n == 2) {
    const double a = h(0, 0).real(), d = h(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    ev << mean + radius, mean - radius;
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    ev = solver.eigenvalues().reverse();
  }
  return ev.cwiseMax(0.0);
}

}  // namespace kernel

// ---------------------------------------------------------------------------
// Operations

DensityMatrix partial_trace(const PureState& state, const std::vector<std::size_t>& keep_in) {
  const auto keep = checked_keep(keep_in, state.parties());
  return DensityMatrix(kernel::reduced_density(state.amplitudes(), state.dims(), keep), select(state.dims(), keep));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep_in) {
  const auto keep = checked_keep(keep_in, rho.parties());
  const auto rest = complement(keep, rho.parties());
  const Dims& dims = rho.dims();
  const std::size_t n = dims.size();
  std::vector<std::size_t> stride(n);
  for (std::size_t i = n, s = 1; i-- > 0;) {
    stride[i] = s;
    s *= dims[i];
  }
  auto offsets = [&](const std::vector<std::size_t>& parties) {
    std::vector<std::size_t> out{0};
    for (auto p : parties) {
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[p]);
      for (auto base : out)
        for (std::size_t digit = 0; digit < dims[p]; ++digit) next.push_back(base + digit * stride[p]);
      out = std::move(next);
    }
    return out;
  };
  const auto kept = offsets(keep);
  const auto traced = offsets(rest);
  const auto dk = static_cast<Eigen::Index>(kept.size());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < dk; ++i)
    for (Eigen::Index j = 0; j < dk; ++j) {
      cplx acc = 0.0;
      for (auto t : traced)
        acc += m(static_cast<Eigen::Index>(kept[i] + t), static_cast<Eigen::Index>(kept[j] + t));
      out(i, j) = acc;
    }
  return DensityMatrix(std::move(out), select(dims, keep));
}

Spectrum spectral_decompose(const DensityMatrix& rho) { return rho.spectrum(); }

Spectrum spectral_decompose(const Matrix& hermitian) {
  if (hermitian.rows() != hermitian.cols()) throw DomainError("spectral_decompose needs a square matrix");
  if (hermitian_deviation(hermitian) > kHermitianTolerance)
    throw DomainError("spectral_decompose: matrix is not Hermitian");
  return descending_eigen(0.5 * (hermitian + hermitian.adjoint()));
}

Matrix matrix_power(const Spectrum& spectrum, double exponent) {
  if (exponent == 0.0) throw DomainError("matrix_power: exponent must be nonzero");
  RealVector f = spectrum.eigenvalues.unaryExpr(
      [exponent](double l) { return l > kSupportThreshold ? std::pow(l, exponent) : 0.0; });
  return spectrum.eigenvectors * f.asDiagonal() * spectrum.eigenvectors.adjoint();
}

Matrix matrix_power(const DensityMatrix& rho, double exponent) { return matrix_power(rho.spectrum(), exponent); }

double trace_power(const RealVector& eigenvalues, double x) {
  if (!(x > 0.0)) throw DomainError("trace_power: exponent must be positive");
  std::size_t support = 0;
  double sum = 0.0;
  for (auto l : eigenvalues) {
    if (l <= kSupportThreshold) continue;
    ++support;
    sum += std::pow(l, x);
  }
  return support == 1 ? 1.0 : sum;
}

double trace_power(const DensityMatrix& rho, double x) { return trace_power(rho.spectrum().eigenvalues, x); }

RealVector schmidt_coefficients(const PureState& state, const Partition& bipartition) {
  if (bipartition.size() != 2 || bipartition.universe() != state.parties() || !bipartition.covers_universe())
    throw DomainError("schmidt_coefficients needs a two-block cover of the parties");
  std::vector<std::size_t> order = bipartition.blocks()[0];
  order.insert(order.end(), bipartition.blocks()[1].begin(), bipartition.blocks()[1].end());
  const Vector permuted = kernel::permute_parties(state.amplitudes(), state.dims(), order);
  const auto da = static_cast<Eigen::Index>(total_dimension(select(state.dims(), bipartition.blocks()[0])));
  const auto db = static_cast<Eigen::Index>(state.dimension()) / da;
  Eigen::Map<const Matrix> m(permuted.data(), db, da);
  Eigen::JacobiSVD<Matrix> svd(m);
  const RealVector& sv = svd.singularValues();
  const auto count = (sv.array() > 1e-12).count();
  return sv.head(count);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

PureState tensor(const PureState& a, const PureState& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  Vector v = kron(a.amplitudes(), b.amplitudes());
  return PureState::normalized(std::move(v), std::move(dims));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.matrix(), b.matrix()), std::move(dims));
}

}  // namespace unient
