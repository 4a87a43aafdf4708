#include "unient/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "unient/bipartite.hpp"
#include "unient/errors.hpp"
#include "unient/multipartite.hpp"

namespace unient {

namespace {

constexpr std::size_t kScalarDefault = 10000;
constexpr std::size_t kRoofDefault = 1000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const Matrix diff = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double lambda) {
  return DensityMatrix(lambda * a.matrix() + (1.0 - lambda) * b.matrix(), a.dims());
}

// A pair of full-rank states at trace distance >= 1e-3.
std::pair<DensityMatrix, DensityMatrix> distinct_pair(std::size_t d, const RngConfig& rng) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng r(rng.child(attempt));
    DensityMatrix a = sample_ginibre_density(Dims{d}, d, r);
    DensityMatrix b = sample_ginibre_density(Dims{d}, d, r);
    if (trace_distance(a, b) >= 1e-3) return {std::move(a), std::move(b)};
  }
}

DensityMatrix diagonal_state(std::vector<double> weights) { return DensityMatrix::diagonal(weights, {2, 2}); }

// tr[rho^((a+1)/2) rho_B^((a-1)/2) (x) rho_C^((a-1)/2)] - tr rho^a for a two-qubit rho.
double hierarchy_difference(const DensityMatrix& rho, double a) {
  const double half = 0.5 * (a - 1.0);
  const Matrix lhs_op = matrix_power(rho, 0.5 * (a + 1.0)) *
                        kron(matrix_power(partial_trace(rho, {0}), half), matrix_power(partial_trace(rho, {1}), half));
  return lhs_op.trace().real() - trace_power(rho, a);
}

struct Builder {
  SuiteReport& report;
  void add(std::string label, double residual, const Check& check) {
    report.cases.push_back({std::move(label), residual, check.passes(residual)});
  }
  void add(std::string label, double residual, bool passed) {
    report.cases.push_back({std::move(label), residual, passed});
  }
};

std::size_t cases_or(const CorpusSpec& corpus, std::size_t fallback) {
  return corpus.cases == 0 ? fallback : corpus.cases;
}

MeasureParams require_family(const MeasureParams& p, Family family, std::string_view suite) {
  if (p.family() != family)
    throw DomainError(std::string(suite) + " needs " + (family == Family::QS ? "QS" : "RT") + " parameters");
  return p;
}

// ---------------------------------------------------------------------------

void concavity(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::above(1e-12);
  report.conventions.push_back("S(mix) - [l S(rho1) + (1-l) S(rho2)]: " + check.describe());
  const double qs[] = {1.5, 2.0, 3.0};
  const double lambdas[] = {0.25, 0.5, 0.75};
  Builder b{report};
  for (std::size_t i = 0, n = cases_or(corpus, kScalarDefault); i < n; ++i) {
    const MeasureParams p = corpus.params.value_or(MeasureParams::qs(qs[i % 3], 1.0 / qs[i % 3]));
    const double lambda = lambdas[(i / 3) % 3];
    const std::size_t d = corpus.local_dim.value_or(2 + (i / 9) % 2);
    const auto [r1, r2] = distinct_pair(d, rng.child(i));
    const double gap = unified_entropy(mix(r1, r2, lambda), p) - lambda * unified_entropy(r1, p) -
                       (1.0 - lambda) * unified_entropy(r2, p);
    b.add(p.to_string() + " d=" + std::to_string(d) + " l=" + fmt(lambda), gap, check);
  }
}

void convexity(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::above(1e-12);
  report.conventions.push_back("[f(rho1) + f(rho2)]/2 - f(mid), f = (tr rho^q)^(1/q): " + check.describe());
  const double qs[] = {1.5, 2.0, 3.0};
  Builder b{report};
  for (std::size_t i = 0, n = cases_or(corpus, kScalarDefault); i < n; ++i) {
    const double q = corpus.params ? corpus.params->a() : qs[i % 3];
    const std::size_t d = corpus.local_dim.value_or(2 + (i / 3) % 2);
    const auto [r1, r2] = distinct_pair(d, rng.child(i));
    const double gap = 0.5 * (schatten_norm(r1, q) + schatten_norm(r2, q)) - schatten_norm(mix(r1, r2, 0.5), q);
    b.add("q=" + fmt(q) + " d=" + std::to_string(d), gap, check);
  }
}

void ordering(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::above(1e-12);
  report.conventions.push_back("smallest gap of E(q,s) < E(q,1/s) < E(1/q,1/s): " + check.describe());
  const std::pair<double, double> grid[] = {{2.0, 2.0}, {3.0, 2.0}, {2.0, 1.5}};
  Builder b{report};
  std::size_t skipped = 0;
  for (std::size_t i = 0, n = cases_or(corpus, kScalarDefault); i < n; ++i) {
    const auto [q, s] = corpus.params ? std::pair{corpus.params->a(), corpus.params->b()} : grid[i % 3];
    const std::size_t d = corpus.local_dim.value_or(2 + (i / 3) % 2);
    const PureState psi = sample_haar_pure({d, d}, rng.child(i));
    const OrderingTriple t = parameter_ordering_triple(psi, q, s);
    const std::string label = "q=" + fmt(q) + " s=" + fmt(s) + " d=" + std::to_string(d);
    if (!t.entangled) {
      ++skipped;
      b.add(label + " (product, excluded)", t.margin(), true);
      continue;
    }
    b.add(label, t.margin(), check);
  }
  if (skipped) report.notes.push_back(std::to_string(skipped) + " product samples excluded from the ordering claim");
}

double subadditivity_residual(const DensityMatrix& rho, const MeasureParams& p) {
  auto g = [&](const DensityMatrix& r) { return std::pow(trace_power(r, p.a()), p.b()); };
  return 1.0 + g(rho) - g(partial_trace(rho, {0})) - g(partial_trace(rho, {1}));
}

void subadditivity_bound(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check random_check = Check::at_least(1e-9);
  const Check pure_check = Check::abs_within(1e-9);
  report.conventions.push_back("random: 1 + G(rho_AB) - G(rho_A) - G(rho_B): " + random_check.describe());
  report.conventions.push_back("rho_A pure: same residual " + pure_check.describe());
  const double qs[] = {1.5, 2.0, 3.0};
  auto params_for = [&](std::size_t i) {
    if (corpus.params) return require_family(*corpus.params, Family::QS, "lemma2");
    const double q = qs[i % 3];
    const double s[] = {1.0 / q, 1.0, 2.0};
    return MeasureParams::qs(q, s[(i / 3) % 3]);
  };
  Builder b{report};
  const std::size_t n = cases_or(corpus, kScalarDefault);
  for (std::size_t i = 0; i < n; ++i) {
    const MeasureParams p = params_for(i);
    const std::size_t d = corpus.local_dim.value_or(2 + (i / 9) % 2);
    Rng r(rng.child(i));
    const std::size_t rank = 1 + r.next_u32() % (d * d);
    const DensityMatrix rho = sample_ginibre_density({d, d}, rank, r);
    b.add(p.to_string() + " d=" + std::to_string(d) + " rank=" + std::to_string(rank), subadditivity_residual(rho, p),
          random_check);
  }
  const std::size_t constructed = std::max<std::size_t>(1, n / 100);
  for (std::size_t j = 0; j < constructed; ++j) {
    const MeasureParams p = params_for(j);
    const std::size_t d = corpus.local_dim.value_or(2 + (j / 9) % 2);
    Rng r(rng.child(n + j));
    const DensityMatrix a = sample_haar_pure({d}, r).density();
    const DensityMatrix bpart = sample_ginibre_density({d}, 1 + r.next_u32() % d, r);
    const DensityMatrix rho = tensor(a, bpart);
    b.add(p.to_string() + " d=" + std::to_string(d) + " pure A", subadditivity_residual(rho, p), pure_check);
  }
}

void product_counterexample(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::above(1e-9);
  report.conventions.push_back("1 + G(sigma (x) sigma) - 2 G(sigma), G = (tr rho^r)^t: " + check.describe());
  const MeasureParams p =
      corpus.params ? require_family(*corpus.params, Family::RT, "eq19-counterexample") : MeasureParams::rt(0.5, 1.0);
  Builder b{report};
  for (std::size_t i = 0, n = cases_or(corpus, 100); i < n; ++i) {
    const DensityMatrix sigma =
        i == 0 ? DensityMatrix::diagonal({0.7, 0.3}, {2})
               : sample_ginibre_density(Dims{corpus.local_dim.value_or(2)}, corpus.local_dim.value_or(2), rng.child(i));
    const double g = std::pow(trace_power(sigma, p.a()), p.b());
    const double gg = std::pow(trace_power(tensor(sigma, sigma), p.a()), p.b());
    b.add(i == 0 ? "sigma = diag(0.7, 0.3)" : "random sigma", 1.0 + gg - 2.0 * g, check);
  }
}

void hierarchy_qs(const CorpusSpec& corpus, const RngConfig&, SuiteReport& report) {
  report.conventions.push_back(
      "tr[rho^((q+1)/2) rho_B^((q-1)/2) (x) rho_C^((q-1)/2)] - tr rho^q on diag(1-2x, x, x, 0): > 0 and same sign "
      "as px^2(1 - 4px - 2x^(2p)), p = (q-1)/2");
  const double x = corpus.x.value_or(1e-3);
  std::vector<double> qs = {2.0, 3.0};
  if (corpus.params) qs = {require_family(*corpus.params, Family::QS, "appD-qs").a()};
  const std::size_t n = cases_or(corpus, qs.size());
  Builder b{report};
  for (std::size_t i = 0; i < n; ++i) {
    const double q = qs[i % qs.size()];
    const double p = 0.5 * (q - 1.0);
    const double delta = hierarchy_difference(diagonal_state({1.0 - 2.0 * x, x, x, 0.0}), q);
    const double predictor = p * x * x * (1.0 - 4.0 * p * x - 2.0 * std::pow(x, 2.0 * p));
    b.add("q=" + fmt(q) + " x=" + fmt(x), delta, delta > 0.0 && predictor > 0.0);
    report.notes.push_back("q=" + fmt(q) + ": predictor " + fmt(predictor));
  }
}

void hierarchy_rt(const CorpusSpec& corpus, const RngConfig&, SuiteReport& report) {
  const Check check = Check::below(0.0);
  report.conventions.push_back(
      "tr[rho^((r+1)/2) rho_B^((r-1)/2) (x) rho_C^((r-1)/2)] - tr rho^r on diag(0.04-x, 0.16+x, 0.16+x, 0.64-x): " +
      check.describe());
  std::vector<double> rs = {0.5};
  if (corpus.params) rs = {require_family(*corpus.params, Family::RT, "appD-rt").a()};
  const std::size_t n = cases_or(corpus, rs.size());
  Builder b{report};
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rs[i % rs.size()];
    const double x = corpus.x.value_or(0.002 * (r - 1.0) * (r - 1.0));
    const double delta = hierarchy_difference(diagonal_state({0.04 - x, 0.16 + x, 0.16 + x, 0.64 - x}), r);
    const double pp = 0.5 * (r - 1.0);
    const double lead = pp * std::pow(std::pow(0.2, 2.0 * pp) - std::pow(0.8, 2.0 * pp), 2.0) * x;
    b.add("r=" + fmt(r) + " x=" + fmt(x), delta, check);
    report.notes.push_back("r=" + fmt(r) + ": first-order term " + fmt(lead));
  }
}

std::vector<GlobalMeasureKind> four_kinds(const CorpusSpec& corpus) {
  MeasureParams qs = MeasureParams::qs(2.0, 1.0);
  MeasureParams rt = MeasureParams::rt(0.5, 1.0);
  if (corpus.params) (corpus.params->family() == Family::QS ? qs : rt) = *corpus.params;
  return {{GlobalForm::SumQS, qs}, {GlobalForm::SumRT, rt}, {GlobalForm::ProdQS, qs}, {GlobalForm::ProdRT, rt}};
}

void coarsening(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  constexpr double kTol = 1e-9;
  const Check check = Check::at_least(kTol);
  report.conventions.push_back("min over pairs of E(finer) - E(coarser): " + check.describe());
  report.notes.push_back(
      "discard steps leave a mixed subsystem; its value is a roof upper bound, so each residual is a lower bound "
      "on the true one");
  const std::size_t n_parties = 4;
  const std::size_t d = corpus.local_dim.value_or(2);
  const auto kinds = four_kinds(corpus);

  std::vector<Partition> finer_list = partitions_of({0, 1, 2, 3}, n_parties, 3);
  std::vector<Partition> candidates;
  for (unsigned mask = 0; mask < (1u << n_parties); ++mask) {
    Block subset;
    for (std::size_t i = 0; i < n_parties; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (subset.size() < 2) continue;
    for (auto& p : partitions_of(subset, n_parties, 2)) candidates.push_back(std::move(p));
  }
  std::vector<std::pair<Partition, Partition>> a_pairs, b_pairs;
  for (const auto& f : finer_list)
    for (const auto& c : candidates) {
      if (coarser_a(f, c)) a_pairs.emplace_back(f, c);
      if (coarser_b(f, c)) b_pairs.emplace_back(f, c);
    }
  report.notes.push_back(std::to_string(a_pairs.size()) + " discard pairs x 4 kinds, " +
                         std::to_string(b_pairs.size()) + " merge pairs (SumQS) per state");

  RoofConfig quick = corpus.roof;
  quick.restarts = 0;
  quick.max_iterations = 1;
  RoofConfig thorough = corpus.roof;
  thorough.restarts = std::max<std::size_t>(thorough.restarts, 20);

  std::size_t escalations = 0;
  Builder b{report};
  for (std::size_t i = 0, n = cases_or(corpus, kRoofDefault); i < n; ++i) {
    const PureState psi = sample_haar_pure(Dims(n_parties, d), rng.child(i));
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      std::map<Partition, double> cache;
      auto value = [&](const Partition& part, bool escalate) {
        auto it = cache.find(part);
        if (it == cache.end()) {
          quick.rng = rng.child(i).child(1 + k);
          it = cache.emplace(part, measure_on_partition(psi, part, kinds[k], quick).value).first;
        }
        if (escalate) {
          thorough.rng = rng.child(i).child(1 + k);
          it->second = std::min(it->second, measure_on_partition(psi, part, kinds[k], thorough).value);
        }
        return it->second;
      };
      for (const auto& [f, c] : a_pairs) {
        double r = value(f, false) - value(c, false);
        if (r < -kTol && !c.covers_universe()) {
          ++escalations;
          r = value(f, false) - value(c, true);
        }
        worst = std::min(worst, r);
      }
      if (kinds[k].form() == GlobalForm::SumQS)
        for (const auto& [f, c] : b_pairs) worst = std::min(worst, value(f, false) - value(c, false));
    }
    b.add("state " + std::to_string(i), worst, check);
  }
  report.notes.push_back(std::to_string(escalations) + " roof values re-estimated with more restarts");
}

void superadditivity(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::at_least(1e-10);
  report.conventions.push_back(
      "min of E(n) - E(k) - E(n-k) for SumQS, SumRT, ProdRT; E(k) + E(n-k) - E(n) for ProdQS; (1-a)(1-b) and "
      "(c-1)(d-1) for the product-form factors: " + check.describe());
  const std::pair<double, double> qs_grid[] = {{2.0, 1.0}, {3.0, 2.0}, {2.0, 0.5}};
  const std::pair<double, double> rt_grid[] = {{0.5, 1.0}, {0.3, 0.5}, {0.7, 0.2}};
  const std::size_t n = 4;
  const std::size_t d = corpus.local_dim.value_or(2);
  Builder b{report};
  for (std::size_t i = 0, cases = cases_or(corpus, kScalarDefault); i < cases; ++i) {
    const std::size_t k = 1 + i % (n - 1);
    MeasureParams qs = MeasureParams::qs(qs_grid[(i / 3) % 3].first, qs_grid[(i / 3) % 3].second);
    MeasureParams rt = MeasureParams::rt(rt_grid[(i / 3) % 3].first, rt_grid[(i / 3) % 3].second);
    if (corpus.params) (corpus.params->family() == Family::QS ? qs : rt) = *corpus.params;
    Rng r(rng.child(i));
    const PureState left = sample_haar_pure(Dims(k, d), r);
    const PureState right = sample_haar_pure(Dims(n - k, d), r);
    const PureState whole = tensor(left, right);
    auto e = [&](const PureState& s, GlobalForm form, const MeasureParams& p) {
      return global_measure_pure(s, Partition::finest(s.parties()), {form, p});
    };
    double worst = std::numeric_limits<double>::infinity();
    for (auto [form, p] : {std::pair{GlobalForm::SumQS, qs}, std::pair{GlobalForm::SumRT, rt},
                           std::pair{GlobalForm::ProdRT, rt}})
      worst = std::min(worst, e(whole, form, p) - e(left, form, p) - e(right, form, p));
    worst = std::min(worst, e(left, GlobalForm::ProdQS, qs) + e(right, GlobalForm::ProdQS, qs) -
                                e(whole, GlobalForm::ProdQS, qs));
    auto factor = [&](const PureState& s, const MeasureParams& p) {
      return std::pow(product_expectation(s, Partition::finest(s.parties()), 0.5 * (p.a() - 1.0)), p.b());
    };
    worst = std::min(worst, (1.0 - factor(left, qs)) * (1.0 - factor(right, qs)));
    worst = std::min(worst, (factor(left, rt) - 1.0) * (factor(right, rt) - 1.0));
    b.add("k=" + std::to_string(k) + " " + qs.to_string() + " " + rt.to_string(), worst, check);
  }
}

void gem_bounds(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::at_least(1e-10);
  report.conventions.push_back("genuine value - max(bipartition-sum bound, global-sum bound): " + check.describe());
  const MeasureParams grid[] = {MeasureParams::qs(2.0, 1.0), MeasureParams::qs(2.0, 2.0), MeasureParams::rt(0.5, 1.0)};
  Builder b{report};
  std::map<std::string, std::size_t> failures_by_shape;
  for (std::size_t i = 0, cases = cases_or(corpus, kScalarDefault); i < cases; ++i) {
    const MeasureParams p = corpus.params.value_or(grid[i % 3]);
    const std::size_t n = 3 + (i / 3) % 2;
    const std::size_t d = corpus.local_dim.value_or(2 + (i / 6) % 2);
    const PureState psi = sample_haar_pure(Dims(n, d), rng.child(i));
    const double gem = genuine_measure_pure(psi, p).value;
    const GenuineLowerBounds lb = genuine_lower_bounds(psi, p);
    const std::string label = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + p.to_string();
    const double residual = gem - std::max(lb.bipartition_sum, lb.global_sum);
    b.add(label, residual, check);
    if (!check.passes(residual)) ++failures_by_shape[label];
  }
  for (const auto& [label, count] : failures_by_shape)
    report.notes.push_back(label + ": " + std::to_string(count) + " bound violations");
}

void roof_oracle(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::within(-1e-9, 1e-3);
  report.conventions.push_back("roof estimate - concurrence closed form: " + check.describe());
  const MeasureParams grid[] = {MeasureParams::qs(2.0, 1.0), MeasureParams::rt(0.5, 1.0)};
  Builder b{report};
  for (std::size_t i = 0, cases = cases_or(corpus, kRoofDefault); i < cases; ++i) {
    const MeasureParams p = corpus.params.value_or(grid[i % 2]);
    const std::size_t rank = 2 + (i / 2) % 2;
    const DensityMatrix rho = sample_ginibre_density({2, 2}, rank, rng.child(i));
    RoofConfig cfg = corpus.roof;
    cfg.rng = rng.child(i).child(0);
    const RoofGapReport gap = roof_gap_report(rho, p, cfg);
    b.add(p.to_string() + " rank=" + std::to_string(rank), *gap.gap, check);
  }
}

void fidelity(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  const Check check = Check::abs_within(1e-10);
  report.conventions.push_back("ProdQS(3,1) - (1 - <psi|(x) rho_j|psi>)/2: " + check.describe());
  Builder b{report};
  for (std::size_t i = 0, cases = cases_or(corpus, kScalarDefault); i < cases; ++i) {
    const PureState psi = sample_haar_pure(Dims(3, corpus.local_dim.value_or(2)), rng.child(i));
    const FidelityReduction fr = fidelity_reduction_check(psi);
    b.add("haar", fr.lhs - fr.rhs, check);
  }
}

void monogamy(const CorpusSpec& corpus, const RngConfig& rng, SuiteReport& report) {
  constexpr double kTol = 1e-9;
  report.conventions.push_back("disentangled states (E(A|BC) = E(AB)): -E(AC) must be >= -1e-9");
  report.conventions.push_back("generic states: residual E(A|BC) - E(AB) - E(AC) is reported, not judged");
  const MeasureParams p = corpus.params.value_or(MeasureParams::qs(2.0, 1.0));
  const std::size_t d = corpus.local_dim.value_or(2);
  RoofConfig cfg = corpus.roof;
  Builder b{report};
  std::size_t certified_passes = 0, generic = 0, with_alpha = 0;
  for (std::size_t i = 0, cases = cases_or(corpus, kRoofDefault); i < cases; ++i) {
    Rng r(rng.child(i));
    const bool disentangled = i % 2 == 1;
    const PureState psi =
        disentangled ? tensor(sample_haar_pure({d, d}, r), sample_haar_pure({d}, r)) : sample_haar_pure({d, d, d}, r);
    cfg.rng = rng.child(i).child(0);
    const MonogamyReport m = monogamy_scan(psi.density(), p, cfg);
    if (m.disentangling_gap <= kTol) {
      b.add("disentangled", -m.pair_ac, Check::at_least(kTol));
    } else {
      ++generic;
      if (m.residual >= 0.0) ++certified_passes;
      if (m.alpha) ++with_alpha;
      b.add("generic", m.residual, true);
    }
  }
  report.notes.push_back(std::to_string(certified_passes) + "/" + std::to_string(generic) +
                         " generic states satisfy the plain inequality (certified: exact left side, upper-bounded "
                         "pair terms)");
  report.notes.push_back(std::to_string(with_alpha) + "/" + std::to_string(generic) +
                         " generic states satisfy the power form for some alpha on the grid");
}

using SuiteFn = void (*)(const CorpusSpec&, const RngConfig&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"concavity-lemma1", concavity},
      {"convexity-appA", convexity},
      {"prop1-ordering", ordering},
      {"lemma2", subadditivity_bound},
      {"eq19-counterexample", product_counterexample},
      {"appD-qs", hierarchy_qs},
      {"appD-rt", hierarchy_rt},
      {"coarsening", coarsening},
      {"superadditivity", superadditivity},
      {"gem-bounds", gem_bounds},
      {"roof-oracle", roof_oracle},
      {"fidelity-reduction", fidelity},
      {"monogamy-scan", monogamy},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool Check::passes(double r) const {
  switch (kind) {
    case Kind::AtLeast: return r >= lo;
    case Kind::Above: return r > lo;
    case Kind::Below: return r < lo;
    case Kind::AbsWithin: return std::abs(r) <= hi;
    case Kind::Within: return r >= lo && r <= hi;
  }
  return false;
}

std::string Check::describe() const {
  switch (kind) {
    case Kind::AtLeast: return "pass iff >= " + fmt(lo);
    case Kind::Above: return "pass iff > " + fmt(lo);
    case Kind::Below: return "pass iff < " + fmt(lo);
    case Kind::AbsWithin: return "pass iff |r| <= " + fmt(hi);
    case Kind::Within: return "pass iff in [" + fmt(lo) + ", " + fmt(hi) + "]";
  }
  return "";
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.passed; }));
}

double SuiteReport::min_residual() const {
  double out = std::numeric_limits<double>::infinity();
  for (const auto& c : cases) out = std::min(out, c.residual);
  return out;
}

double SuiteReport::max_residual() const {
  double out = -std::numeric_limits<double>::infinity();
  for (const auto& c : cases) out = std::max(out, c.residual);
  return out;
}

bool SuiteReport::passed() const { return !cases.empty() && failures() == 0; }

SuiteReport run_suite(std::string_view name, const CorpusSpec& corpus, const RngConfig& rng) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (it == suites.end()) throw DomainError("unknown suite '" + std::string(name) + "'");
  SuiteReport report;
  report.suite = it->first;
  report.rng = rng;
  it->second(corpus, rng, report);
  if (report.cases.empty()) throw DomainError("suite '" + report.suite + "' produced no cases");
  return report;
}

MonogamyReport monogamy_scan(const DensityMatrix& rho, const MeasureParams& p, const RoofConfig& cfg) {
  if (rho.parties() != 3) throw DomainError("monogamy_scan needs a three-party state");
  const Partition cut = Partition::bipartition({0}, 3);
  const Partition pair_cut = Partition::bipartition({0}, 2);
  MonogamyReport out;
  out.certified = rho.is_pure();
  out.whole = convex_roof_estimate(rho, cut, p, cfg).value;
  RoofConfig pair_cfg = cfg;
  pair_cfg.rng = cfg.rng.child(1);
  out.pair_ab = convex_roof_estimate(partial_trace(rho, {0, 1}), pair_cut, p, pair_cfg).value;
  pair_cfg.rng = cfg.rng.child(2);
  out.pair_ac = convex_roof_estimate(partial_trace(rho, {0, 2}), pair_cut, p, pair_cfg).value;
  out.residual = out.whole - out.pair_ab - out.pair_ac;
  out.disentangling_gap = std::abs(out.whole - out.pair_ab);
  if (out.whole > 0.0)
    for (int k = 1; k <= 16; ++k) {
      const double alpha = 0.25 * k;
      if (std::pow(out.whole, alpha) >= std::pow(out.pair_ab, alpha) + std::pow(out.pair_ac, alpha)) {
        out.alpha = alpha;
        break;
      }
    }
  return out;
}

}  // namespace unient
