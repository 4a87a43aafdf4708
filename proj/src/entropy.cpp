#include "unient/entropy.hpp"

#include <cmath>
#include <sstream>

#include "unient/errors.hpp"

namespace unient {

MeasureParams::MeasureParams(Family family, double a, double b) : family_(family), a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("measure parameters must be finite");
  if (family == Family::QS) {
    if (!(a > 1.0) || !(a * b >= 1.0))
      throw DomainError("QS parameters need q > 1 and q*s >= 1 (got " + to_string() + ")");
  } else {
    if (!(a > 0.0 && a < 1.0) || !(b > 0.0 && b <= 1.0))
      throw DomainError("RT parameters need 0 < r < 1 and 0 < t <= 1 (got " + to_string() + ")");
  }
}

std::string MeasureParams::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << (family_ == Family::QS ? "QS(" : "RT(") << a_ << ", " << b_ << ")";
  return os.str();
}

double unified_from_trace(double trace_power_value, const MeasureParams& p) {
  if (trace_power_value == 1.0) return 0.0;
  return (std::pow(trace_power_value, p.b()) - 1.0) / ((1.0 - p.a()) * p.b());
}

double unified_entropy(const RealVector& eigenvalues, const MeasureParams& p) {
  return unified_from_trace(trace_power(eigenvalues, p.a()), p);
}

double unified_entropy(const DensityMatrix& rho, const MeasureParams& p) {
  return unified_entropy(rho.spectrum().eigenvalues, p);
}

double reduced_function(const DensityMatrix& reduced, const MeasureParams& p) { return unified_entropy(reduced, p); }

double classical_limit_entropy(const DensityMatrix& rho, const ClassicalEntropy& kind) {
  const RealVector& ev = rho.spectrum().eigenvalues;
  auto check = [](double x) {
    if (!(x > 0.0) || x == 1.0) throw DomainError("entropy order must be positive and different from 1");
  };
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Tsallis>) {
          check(k.x);
          return (1.0 - trace_power(ev, k.x)) / (k.x - 1.0);
        } else if constexpr (std::is_same_v<K, Renyi>) {
          check(k.x);
          return std::log(trace_power(ev, k.x)) / (1.0 - k.x);
        } else {
          double h = 0.0;
          for (auto l : ev)
            if (l > kSupportThreshold) h -= l * std::log(l);
          return h;
        }
      },
      kind);
}

double schatten_norm(const DensityMatrix& rho, double q) { return std::pow(trace_power(rho, q), 1.0 / q); }

}  // namespace unient
