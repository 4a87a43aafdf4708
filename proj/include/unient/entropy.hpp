#pragma once

#include <string>
#include <variant>

#include "unient/state.hpp"

namespace unient {

/// Which branch of the unified entropy a parameter pair belongs to.
///  QS: a = q > 1, b = s with q*s >= 1.
///  RT: a = r in (0, 1), b = t in (0, 1].
enum class Family { QS, RT };

class MeasureParams {
 public:
  /// Throws DomainError outside the family's domain.
  MeasureParams(Family family, double a, double b);
  static MeasureParams qs(double q, double s) { return {Family::QS, q, s}; }
  static MeasureParams rt(double r, double t) { return {Family::RT, r, t}; }

  Family family() const noexcept { return family_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::string to_string() const;

  friend bool operator==(const MeasureParams&, const MeasureParams&) = default;

 private:
  Family family_;
  double a_;
  double b_;
};

/// [(tr rho^a)^b - 1] / ((1 - a) b), evaluated from a trace-power value.
double unified_from_trace(double trace_power_value, const MeasureParams& p);

double unified_entropy(const DensityMatrix& rho, const MeasureParams& p);
double unified_entropy(const RealVector& eigenvalues, const MeasureParams& p);

/// Value of the pure-state measure as a function of the one-side reduced state.
/// Numerically identical to unified_entropy; kept separate because the measure
/// modules and their callers speak in terms of reduced functions.
double reduced_function(const DensityMatrix& reduced, const MeasureParams& p);

struct Tsallis {
  double x;
};
struct Renyi {
  double x;
};
struct VonNeumann {};
using ClassicalEntropy = std::variant<Tsallis, Renyi, VonNeumann>;

/// Closed-form special cases (natural logarithm). x must be positive and != 1.
double classical_limit_entropy(const DensityMatrix& rho, const ClassicalEntropy& kind);

/// (tr rho^q)^(1/q), q > 0.
double schatten_norm(const DensityMatrix& rho, double q);

}  // namespace unient
