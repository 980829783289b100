#pragma once

// Reference values computed without the library: plain long-double sums over
// a fixed range of k and direct quadrature.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace brute {

using Real = long double;
inline constexpr Real kPi = std::numbers::pi_v<long double>;

/// Physicists' Hermite polynomial H_n(x).
inline Real physicists_hermite(int n, Real x) {
  Real prev = 1.0L;
  if (n == 0) return prev;
  Real cur = 2.0L * x;
  for (int k = 1; k < n; ++k) {
    const Real next = 2.0L * x * cur - 2.0L * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// |h_n^(xi)|^2 for h_n(t) = H_n(sqrt(2 pi) t) e^{-pi t^2} / (2 sqrt(2 pi))^n,
/// the monic-polynomial normalisation; h_n^ = (-i)^n h_n.
inline Real hermite_abs2(int n, Real xi) {
  const Real s = std::sqrt(2.0L * kPi);
  const Real v = physicists_hermite(n, s * xi) / std::pow(2.0L * s, static_cast<Real>(n)) *
                 std::exp(-kPi * xi * xi);
  return v * v;
}

inline Real hermite_time(int n, Real t) {
  const Real s = std::sqrt(2.0L * kPi);
  return physicists_hermite(n, s * t) / std::pow(2.0L * s, static_cast<Real>(n)) *
         std::exp(-kPi * t * t);
}

/// |D_b g ^(xi)|^2 = b |g^(b xi)|^2
inline std::function<Real(Real)> dilated(std::function<Real(Real)> abs2, Real b) {
  return [abs2, b](Real xi) { return b * abs2(b * xi); };
}

inline Real lattice_sum(const std::function<Real(Real)>& abs2, Real omega, int power, int K) {
  Real s = 0.0L;
  for (int k = -K; k <= K; ++k) {
    const Real x = k + omega;
    s += std::pow(x * x, static_cast<Real>(power)) * abs2(x);
  }
  return s;
}

inline Real delta(const std::function<Real(Real)>& abs2, Real omega, int K = 50) {
  return 0.5L * std::sqrt(lattice_sum(abs2, omega, 0, K) / lattice_sum(abs2, omega, 1, K));
}

/// Trapezoid approximation of int_{-8}^{8} g(t) e^{-2 pi i xi t} dt on `points` nodes.
inline std::complex<double> fourier_quadrature(const std::function<std::complex<double>(double)>& g,
                                               double xi, int points = 1024) {
  const double h = 16.0 / (points - 1);
  std::complex<double> acc{};
  for (int j = 0; j < points; ++j) {
    const double t = -8.0 + j * h;
    const double w = (j == 0 || j == points - 1) ? 0.5 : 1.0;
    acc += w * g(t) * std::polar(1.0, -2.0 * std::numbers::pi * xi * t);
  }
  return acc * h;
}

/// sum_{k >= m} w(k) e^{-c (k + 1/2)} over `terms` terms, w(k) = 1 or k.
inline Real geometric_partial(Real c, int m, bool linear, int terms) {
  Real s = 0.0L;
  for (int k = m + terms - 1; k >= m; --k) s += (linear ? k : 1) * std::exp(-c * (k + 0.5L));
  return s;
}

}  // namespace brute
