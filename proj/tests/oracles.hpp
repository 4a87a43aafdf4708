#pragma once

// Reference values computed without the library's kernels: closed forms,
// explicit index loops and brute-force enumeration.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

// Werner family through C = max(0, (3p - 1)/2) and tr rho_A^2 = 1 - C^2/2.
inline double werner_concurrence(double p) { return std::max(0.0, 1.5 * p - 0.5); }

inline double werner_e22(double p) {
  const double c = werner_concurrence(p);
  return c * c / 2.0 - c * c * c * c / 8.0;
}

inline double werner_e2half(double p) {
  const double c = werner_concurrence(p);
  return 2.0 * (1.0 - std::sqrt(1.0 - c * c / 2.0));
}

// (sqrt(l) + sqrt(1 - l))^2 = 1 + C.
inline double werner_ehalfhalf(double p) { return 4.0 * (std::pow(1.0 + werner_concurrence(p), 0.25) - 1.0); }

/// Unified entropy from a probability vector, written out directly. Weights at or
/// below `floor` count as outside the support.
inline double unified(const std::vector<double>& probs, double a, double b, double floor = 1e-12) {
  double tr = 0.0;
  for (double x : probs)
    if (x > floor) tr += std::pow(x, a);
  return (std::pow(tr, b) - 1.0) / ((1.0 - a) * b);
}

/// Binary reduced spectrum of a two-qubit pure state a|00> + b|01> + c|10> + d|11>.
inline std::vector<double> two_qubit_schmidt_weights(cplx a, cplx b, cplx c, cplx d) {
  const double conc = 2.0 * std::abs(a * d - b * c);
  const double small = conc * conc / (2.0 * (1.0 + std::sqrt(std::max(0.0, 1.0 - conc * conc))));
  return {1.0 - small, small};
}

/// Reduced density matrix of `keep` (ascending) by explicit summation over multi-indices.
inline Eigen::MatrixXcd reduced(const Eigen::VectorXcd& psi, const std::vector<std::size_t>& dims,
                                const std::vector<std::size_t>& keep) {
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (auto k : keep) kept[k] = true;
  std::size_t dk = 1;
  for (auto k : keep) dk *= dims[k];
  const std::size_t total = static_cast<std::size_t>(psi.size());

  auto digits = [&](std::size_t index) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = n; i-- > 0;) {
      out[i] = index % dims[i];
      index /= dims[i];
    }
    return out;
  };
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t x = 0; x < total; ++x) {
    const auto dx = digits(x);
    for (std::size_t y = 0; y < total; ++y) {
      const auto dy = digits(y);
      bool same_rest = true;
      for (std::size_t i = 0; i < n; ++i)
        if (!kept[i] && dx[i] != dy[i]) same_rest = false;
      if (!same_rest) continue;
      std::size_t rx = 0, ry = 0;
      for (auto k : keep) {
        rx = rx * dims[k] + dx[k];
        ry = ry * dims[k] + dy[k];
      }
      r(static_cast<Eigen::Index>(rx), static_cast<Eigen::Index>(ry)) += psi(static_cast<Eigen::Index>(x)) *
                                                                         std::conj(psi(static_cast<Eigen::Index>(y)));
    }
  }
  return r;
}

inline std::vector<double> eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  for (auto& x : out) x = std::max(x, 0.0);
  return out;
}

/// Stirling numbers of the second kind by counting restricted growth strings.
inline std::size_t stirling2_bruteforce(std::size_t n, std::size_t k) {
  std::vector<std::size_t> rgs(n, 0);
  std::size_t count = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t pos, std::size_t max_used) {
    if (pos == n) {
      if (max_used + 1 == k) ++count;
      return;
    }
    for (std::size_t v = 0; v <= max_used + 1 && v < k; ++v) {
      rgs[pos] = v;
      go(pos + 1, std::max(max_used, v));
    }
  };
  if (n == 0) return k == 0;
  rgs[0] = 0;
  go(1, 0);
  return count;
}

/// 1 + (tr rho^r)^t - 2 (tr sigma^r)^t for rho = sigma (x) sigma, sigma diagonal.
inline double product_counterexample(const std::vector<double>& sigma, double r, double t) {
  double single = 0.0;
  for (double x : sigma) single += std::pow(x, r);
  double both = 0.0;
  for (double x : sigma)
    for (double y : sigma) both += std::pow(x * y, r);
  return 1.0 + std::pow(both, t) - 2.0 * std::pow(single, t);
}

/// tr[rho^((a+1)/2) rho_B^((a-1)/2) (x) rho_C^((a-1)/2)] - tr rho^a for a diagonal
/// two-qubit rho = diag(w00, w01, w10, w11), powers on the support only.
inline double diagonal_hierarchy_difference(const std::vector<double>& w, double a) {
  auto pw = [](double x, double e) { return x > 0.0 ? std::pow(x, e) : 0.0; };
  const double b[2] = {w[0] + w[1], w[2] + w[3]};
  const double c[2] = {w[0] + w[2], w[1] + w[3]};
  const double h = 0.5 * (a - 1.0);
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double x = w[static_cast<std::size_t>(2 * i + j)];
      lhs += pw(x, 0.5 * (a + 1.0)) * pw(b[i], h) * pw(c[j], h);
      rhs += pw(x, a);
    }
  return lhs - rhs;
}

}  // namespace oracle
