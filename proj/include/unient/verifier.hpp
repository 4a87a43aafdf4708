#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unient/convex_roof.hpp"
#include "unient/entropy.hpp"
#include "unient/random.hpp"
#include "unient/state.hpp"

namespace unient {

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

struct CorpusSpec {
  std::size_t cases = 0;                 // 0 selects the suite default
  std::optional<MeasureParams> params;   // overrides the suite's parameter sweep
  std::optional<std::size_t> local_dim;  // overrides the suite's dimension sweep
  std::optional<double> x;               // diagonal-family parameter for the hierarchy suites
  RoofConfig roof{};                     // rng is derived per case; the field here is ignored
};

/// How a case residual is judged.
struct Check {
  enum class Kind { AtLeast, Above, Below, AbsWithin, Within };
  Kind kind = Kind::AtLeast;
  double lo = 0.0;
  double hi = 0.0;

  static Check at_least(double tol) { return {Kind::AtLeast, -tol, 0.0}; }
  static Check above(double tol) { return {Kind::Above, tol, 0.0}; }
  static Check below(double tol) { return {Kind::Below, -tol, 0.0}; }
  static Check abs_within(double tol) { return {Kind::AbsWithin, 0.0, tol}; }
  static Check within(double lo, double hi) { return {Kind::Within, lo, hi}; }

  bool passes(double residual) const;
  std::string describe() const;
};

struct CaseResult {
  std::string label;
  double residual = 0.0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  RngConfig rng{};
  std::vector<CaseResult> cases;
  std::vector<std::string> conventions;
  std::vector<std::string> notes;

  std::size_t failures() const;
  double min_residual() const;
  double max_residual() const;
  /// True iff there is at least one case and none failed.
  bool passed() const;
};

/// Runs a named property suite on a seeded corpus. Case i draws from rng.child(i).
/// Throws DomainError for an unknown name or an explicitly empty corpus.
SuiteReport run_suite(std::string_view name, const CorpusSpec& corpus, const RngConfig& rng);

struct MonogamyReport {
  double whole = 0.0;      // E(A|BC)
  double pair_ab = 0.0;    // E(AB), roof upper bound unless the marginal is pure
  double pair_ac = 0.0;    // E(AC), same caveat
  double residual = 0.0;   // whole - pair_ab - pair_ac
  double disentangling_gap = 0.0;  // |whole - pair_ab|
  /// Smallest alpha in {0.25, 0.5, ..., 4} with whole^a >= ab^a + ac^a; empty when
  /// none qualifies or E(A|BC) = 0.
  std::optional<double> alpha;
  /// E(A|BC) exact and the pair terms upper bounds: a nonnegative residual is then a proof.
  bool certified = false;
};

/// Tripartite monogamy data for one state; parties A, B, C are 0, 1, 2.
MonogamyReport monogamy_scan(const DensityMatrix& rho, const MeasureParams& p, const RoofConfig& cfg);

}  // namespace unient
