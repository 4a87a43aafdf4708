#include "unient/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "unient/errors.hpp"

namespace unient {

namespace {

void check_cover(const Partition& partition, std::size_t parties) {
  if (partition.universe() != parties || !partition.covers_universe())
    throw DomainError("partition " + partition.to_string() + " does not cover all " + std::to_string(parties) +
                      " parties");
}

std::vector<RealVector> block_weights(const Vector& psi, const Dims& dims, const Partition& partition) {
  std::vector<RealVector> out;
  out.reserve(partition.size());
  for (const auto& block : partition.blocks()) out.push_back(kernel::schmidt_weights(psi, dims, block));
  return out;
}

bool all_blocks_pure(const std::vector<RealVector>& weights) {
  return std::all_of(weights.begin(), weights.end(),
                     [](const RealVector& w) { return (w.array() > kSchmidtWeightFloor).count() <= 1; });
}

double product_expectation_raw(const Vector& psi, const Dims& dims, const Partition& partition, double exponent) {
  std::vector<std::size_t> order;
  Dims grouped;
  for (const auto& block : partition.blocks()) {
    order.insert(order.end(), block.begin(), block.end());
    std::size_t d = 1;
    for (auto i : block) d *= dims[i];
    grouped.push_back(d);
  }
  const Vector permuted = std::is_sorted(order.begin(), order.end()) ? psi : kernel::permute_parties(psi, dims, order);
  Vector phi = permuted;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    const Matrix reduced = kernel::reduced_density(psi, dims, partition.blocks()[j]);
    phi = kernel::apply_on_factor(phi, grouped, j, matrix_power(spectral_decompose(reduced), exponent));
  }
  return permuted.dot(phi).real();
}

double global_from_amplitudes(const Vector& psi, const Dims& dims, const Partition& partition,
                              const GlobalMeasureKind& kind) {
  const auto weights = block_weights(psi, dims, partition);
  if (all_blocks_pure(weights)) return 0.0;
  const MeasureParams& p = kind.params();
  const double scale = (p.a() - 1.0) * p.b();
  if (kind.is_sum()) {
    double sum = 0.0;
    for (const auto& w : weights) sum += std::pow(kernel::weight_trace_power(w, p.a()), p.b());
    return (static_cast<double>(partition.size()) - sum) / (2.0 * scale);
  }
  const double t = product_expectation_raw(psi, dims, partition, 0.5 * (p.a() - 1.0));
  return (1.0 - std::pow(t, p.b())) / scale;
}

double cut_value(const Vector& psi, const Dims& dims, const Block& side, const MeasureParams& p) {
  return unified_from_trace(kernel::weight_trace_power(kernel::schmidt_weights(psi, dims, side), p.a()), p);
}

template <class F>
GenuineValue minimize_over_cuts(std::size_t parties, F&& value_of) {
  if (parties < 2) throw DomainError("genuine measures need at least two parties");
  const auto cuts = enumerate_partitions(parties, 2);
  GenuineValue best{std::numeric_limits<double>::infinity(), cuts.front()};
  for (const auto& cut : cuts) {
    const double v = value_of(cut.blocks()[0]);
    if (v < best.value) best = {v, cut};
  }
  return best;
}

}  // namespace

std::string to_string(GlobalForm form) {
  switch (form) {
    case GlobalForm::SumQS: return "SumQS";
    case GlobalForm::SumRT: return "SumRT";
    case GlobalForm::ProdQS: return "ProdQS";
    case GlobalForm::ProdRT: return "ProdRT";
  }
  return "?";
}

GlobalMeasureKind::GlobalMeasureKind(GlobalForm form, MeasureParams params) : form_(form), params_(params) {
  const bool wants_qs = form == GlobalForm::SumQS || form == GlobalForm::ProdQS;
  if (wants_qs != (params.family() == Family::QS))
    throw DomainError(unient::to_string(form) + " does not accept " + params.to_string());
}

std::string GlobalMeasureKind::to_string() const {
  return unient::to_string(form_) + " " + params_.to_string();
}

double global_measure_pure(const PureState& state, const Partition& partition, const GlobalMeasureKind& kind) {
  check_cover(partition, state.parties());
  return global_from_amplitudes(state.amplitudes(), state.dims(), partition, kind);
}

double product_expectation(const PureState& state, const Partition& partition, double exponent) {
  check_cover(partition, state.parties());
  return product_expectation_raw(state.amplitudes(), state.dims(), partition, exponent);
}

FidelityReduction fidelity_reduction_check(const PureState& state) {
  const Partition finest = Partition::finest(state.parties());
  FidelityReduction out;
  out.lhs = global_measure_pure(state, finest, {GlobalForm::ProdQS, MeasureParams::qs(3.0, 1.0)});
  out.rhs = 0.5 * (1.0 - product_expectation(state, finest, 1.0));
  return out;
}

GenuineValue genuine_measure_pure(const PureState& state, const MeasureParams& p) {
  return minimize_over_cuts(state.parties(),
                            [&](const Block& side) { return cut_value(state.amplitudes(), state.dims(), side, p); });
}

GenuineValue genuine_concurrence(const PureState& state) {
  return minimize_over_cuts(state.parties(), [&](const Block& side) {
    const double purity = kernel::weight_trace_power(kernel::schmidt_weights(state.amplitudes(), state.dims(), side), 2.0);
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
  });
}

double extremal_constant(std::size_t d, const MeasureParams& p) {
  if (d < 2) throw DomainError("extremal constant needs d >= 2");
  return std::pow(static_cast<double>(d), (1.0 - p.a()) * p.b());
}

GenuineLowerBounds genuine_lower_bounds(const PureState& state, const MeasureParams& p) {
  const Dims& dims = state.dims();
  if (dims.size() < 2) throw DomainError("lower bounds need at least two parties");
  if (std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) != dims.end())
    throw DomainError("lower bounds need a common local dimension");
  const std::size_t n = dims.size();
  const double shift = (extremal_constant(dims.front(), p) - 1.0) / ((p.a() - 1.0) * p.b());

  GenuineLowerBounds out;
  for (const auto& cut : enumerate_partitions(n, 2))
    out.bipartition_sum += cut_value(state.amplitudes(), dims, cut.blocks()[0], p);
  out.bipartition_sum += (std::ldexp(1.0, static_cast<int>(n) - 1) - 2.0) * shift;

  const GlobalMeasureKind sum_kind(p.family() == Family::QS ? GlobalForm::SumQS : GlobalForm::SumRT, p);
  out.global_sum = 2.0 * global_measure_pure(state, Partition::finest(n), sum_kind) + static_cast<double>(n - 1) * shift;
  return out;
}

PureFunctional global_functional(const Dims& dims, const Partition& partition, const GlobalMeasureKind& kind) {
  check_cover(partition, dims.size());
  return [dims, partition, kind](const Vector& psi) { return global_from_amplitudes(psi, dims, partition, kind); };
}

PureFunctional genuine_functional(const Dims& dims, const MeasureParams& p) {
  if (dims.size() < 2) throw DomainError("genuine measures need at least two parties");
  return [dims, p, cuts = enumerate_partitions(dims.size(), 2)](const Vector& psi) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& cut : cuts) best = std::min(best, cut_value(psi, dims, cut.blocks()[0], p));
    return best;
  };
}

RoofResult global_measure_mixed(const DensityMatrix& rho, const Partition& partition, const GlobalMeasureKind& kind,
                                const RoofConfig& cfg) {
  return convex_roof_estimate(rho, global_functional(rho.dims(), partition, kind), cfg);
}

RoofResult genuine_measure_mixed(const DensityMatrix& rho, const MeasureParams& p, const RoofConfig& cfg) {
  return convex_roof_estimate(rho, genuine_functional(rho.dims(), p), cfg);
}

PartitionValue measure_on_partition(const PureState& state, const Partition& partition,
                                    const GlobalMeasureKind& kind, const RoofConfig& cfg) {
  if (partition.universe() != state.parties())
    throw DomainError("partition " + partition.to_string() + " is not over " + std::to_string(state.parties()) +
                      " parties");
  if (partition.covers_universe()) return {global_measure_pure(state, partition, kind), true};

  const Block support = partition.support();
  std::vector<std::size_t> position(state.parties(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) position[support[i]] = i;
  std::vector<Block> relabeled;
  for (const auto& block : partition.blocks()) {
    Block b;
    for (auto party : block) b.push_back(position[party]);
    relabeled.push_back(std::move(b));
  }
  const Partition local(std::move(relabeled), support.size());
  const DensityMatrix marginal = partial_trace(state, support);
  const bool pure = marginal.rank() == 1;
  return {global_measure_mixed(marginal, local, kind, cfg).value, pure};
}

MonogamyScan complete_monogamy_scan(const PureState& state, const Partition& finer, const Partition& coarser,
                                    const GlobalMeasureKind& kind, const RoofConfig& cfg) {
  const auto residual = xi_set(finer, coarser);
  MonogamyScan out;
  out.finer = measure_on_partition(state, finer, kind, cfg);
  out.coarser = measure_on_partition(state, coarser, kind, cfg);
  out.equality_gap = out.finer.value - out.coarser.value;
  for (const auto& member : residual) {
    out.residual_set.emplace_back(member, measure_on_partition(state, member, kind, cfg));
    out.residual_max = std::max(out.residual_max, out.residual_set.back().second.value);
  }
  return out;
}

}  // namespace unient
