#include "unient/convex_roof.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "unient/bipartite.hpp"
#include "unient/errors.hpp"

namespace unient {

namespace {

// Members lighter than this carry no measurable weight and are dropped from witnesses.
constexpr double kWitnessFloor = 1e-14;
// Below this the column direction is meaningless.
constexpr double kColumnFloor = 1e-200;
constexpr double kInitialStep = std::numbers::pi / 8.0;
constexpr double kMinStep = 1e-6;
constexpr int kMaxExpansions = 4;

const cplx kPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

struct StartOutcome {
  Matrix columns;
  double value = 0.0;
  bool exhausted = false;
};

class LocalSearch {
 public:
  LocalSearch(const PureFunctional& f, Matrix columns) : f_(f), psi_(std::move(columns)) {
    terms_.resize(static_cast<std::size_t>(psi_.cols()));
    for (Eigen::Index j = 0; j < psi_.cols(); ++j) {
      terms_[static_cast<std::size_t>(j)] = term(psi_.col(j));
      value_ += terms_[static_cast<std::size_t>(j)];
    }
  }

  StartOutcome run(std::size_t max_iterations, double tolerance) {
    double step = kInitialStep;
    std::size_t sweeps = 0;
    bool exhausted = false;
    while (step >= kMinStep) {
      if (sweeps == max_iterations) {
        exhausted = true;
        break;
      }
      ++sweeps;
      const double before = value_;
      for (Eigen::Index j = 0; j + 1 < psi_.cols(); ++j)
        for (Eigen::Index k = j + 1; k < psi_.cols(); ++k)
          for (const cplx& z : kPhases) {
            double angle = step;
            for (int e = 0; e <= kMaxExpansions && try_rotation(j, k, z, angle); ++e) angle *= 2.0;
          }
      if (before - value_ < tolerance) step *= 0.5;
    }
    return {std::move(psi_), value_, exhausted};
  }

 private:
  template <class Col>
  double term(const Col& col) const {
    const double weight = col.squaredNorm();
    if (weight <= kColumnFloor) return 0.0;
    return weight * f_(col / std::sqrt(weight));
  }

  bool try_rotation(Eigen::Index j, Eigen::Index k, cplx z, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vector new_j = c * psi_.col(j) - std::conj(z) * s * psi_.col(k);
    const Vector new_k = z * s * psi_.col(j) + c * psi_.col(k);
    const double tj = term(new_j);
    const double tk = term(new_k);
    auto& old_j = terms_[static_cast<std::size_t>(j)];
    auto& old_k = terms_[static_cast<std::size_t>(k)];
    if (!(tj + tk < old_j + old_k)) return false;
    value_ += (tj + tk) - (old_j + old_k);
    old_j = tj;
    old_k = tk;
    psi_.col(j) = new_j;
    psi_.col(k) = new_k;
    return true;
  }

  const PureFunctional& f_;
  Matrix psi_;
  std::vector<double> terms_;
  double value_ = 0.0;
};

Matrix pad_columns(const Matrix& m, Eigen::Index cols) {
  Matrix out = Matrix::Zero(m.rows(), std::max(cols, m.cols()));
  out.leftCols(m.cols()) = m;
  return out;
}

EnsembleDecomposition to_witness(const Matrix& columns, const Dims& dims) {
  EnsembleDecomposition w;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    const double weight = columns.col(j).squaredNorm();
    if (weight <= kWitnessFloor) continue;
    w.probs.push_back(weight);
    w.states.push_back(PureState::normalized(columns.col(j), dims));
  }
  return w;
}

}  // namespace

Matrix EnsembleDecomposition::reconstruct() const {
  if (states.empty()) throw DomainError("empty ensemble");
  const auto d = static_cast<Eigen::Index>(states.front().dimension());
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t j = 0; j < states.size(); ++j) {
    const Vector& v = states[j].amplitudes();
    out += probs[j] * v * v.adjoint();
  }
  return out;
}

double EnsembleDecomposition::reconstruction_error(const DensityMatrix& rho) const {
  if (states.empty() || states.front().dimension() != rho.dimension()) return INFINITY;
  return (reconstruct() - rho.matrix()).cwiseAbs().maxCoeff();
}

PureFunctional bipartite_functional(const Dims& dims, const Partition& bipartition, const MeasureParams& p) {
  if (bipartition.size() != 2 || bipartition.universe() != dims.size() || !bipartition.covers_universe())
    throw DomainError("expected a two-block cover of the " + std::to_string(dims.size()) + " parties, got " +
                      bipartition.to_string());
  return [dims, side = bipartition.blocks()[0], p](const Vector& psi) {
    return entanglement_from_amplitudes(psi, dims, side, p);
  };
}

RoofResult convex_roof_estimate(const DensityMatrix& rho, const PureFunctional& functional, const RoofConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw DomainError("roof tolerance must be positive");
  if (cfg.max_iterations == 0) throw DomainError("roof max_iterations must be positive");

  const Spectrum& spec = rho.spectrum();
  const std::size_t rank = rho.rank();
  const auto r = static_cast<Eigen::Index>(rank);

  if (rank == 1) {
    RoofResult out;
    out.witness.probs = {1.0};
    out.witness.states = {PureState::normalized(spec.eigenvectors.col(0), rho.dims())};
    out.value = functional(out.witness.states.front().amplitudes());
    return out;
  }

  const std::size_t m = cfg.ensemble_size == 0 ? rank * rank : cfg.ensemble_size;
  if (m < rank)
    throw DomainError("ensemble size " + std::to_string(m) + " is below the rank " + std::to_string(rank));
  const auto mi = static_cast<Eigen::Index>(m);

  const Matrix root = spec.eigenvectors.leftCols(r) * spec.eigenvalues.head(r).cwiseSqrt().asDiagonal();

  std::vector<Matrix> starts;
  starts.push_back(pad_columns(root, mi));
  for (const auto& warm : cfg.warm_starts) {
    if (warm.probs.size() != warm.states.size() || warm.reconstruction_error(rho) > kEnsembleTolerance)
      throw DomainError("warm start does not reconstruct the target state");
    Matrix cols(root.rows(), static_cast<Eigen::Index>(warm.size()));
    for (std::size_t j = 0; j < warm.size(); ++j) {
      if (warm.probs[j] < 0.0) throw DomainError("warm start has a negative weight");
      cols.col(static_cast<Eigen::Index>(j)) = std::sqrt(warm.probs[j]) * warm.states[j].amplitudes();
    }
    starts.push_back(pad_columns(cols, mi));
  }
  const std::size_t fixed = starts.size();
  const std::size_t total = fixed + cfg.restarts;

  auto make_start = [&](std::size_t index) -> Matrix {
    if (index < fixed) return starts[index];
    Rng rng(cfg.rng.child(index - fixed));
    const Matrix w = sample_haar_unitary(m, rng);
    return root * w.topRows(r);
  };

  std::vector<StartOutcome> outcomes(total);
  auto work = [&](std::size_t index) {
    LocalSearch search(functional, make_start(index));
    outcomes[index] = search.run(cfg.max_iterations, cfg.tolerance);
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, total));
  if (threads == 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < total; ++i)
    if (outcomes[i].value < outcomes[best].value) best = i;

  RoofResult out;
  out.best_start = best;
  out.iterations_exhausted = outcomes[best].exhausted;
  out.witness = to_witness(outcomes[best].columns, rho.dims());
  for (std::size_t j = 0; j < out.witness.size(); ++j)
    out.value += out.witness.probs[j] * functional(out.witness.states[j].amplitudes());
  return out;
}

RoofResult convex_roof_estimate(const DensityMatrix& rho, const Partition& bipartition, const MeasureParams& p,
                                const RoofConfig& cfg) {
  return convex_roof_estimate(rho, bipartite_functional(rho.dims(), bipartition, p), cfg);
}

RoofGapReport roof_gap_report(const DensityMatrix& rho, const MeasureParams& p, const RoofConfig& cfg) {
  if (rho.parties() < 2) throw DomainError("roof_gap_report needs at least two parties");
  RoofGapReport out;
  out.estimate = convex_roof_estimate(rho, Partition::bipartition({0}, rho.parties()), p, cfg).value;
  if (rho.dims() == Dims{2, 2}) {
    out.oracle = two_qubit_measure(rho, p);
    out.gap = out.estimate - *out.oracle;
  }
  return out;
}

}  // namespace unient
