#pragma once

namespace gabor {

enum class TailWeight { Unit, Linear };

/// sum_{k >= m} w(k) e^{-c (k + 1/2)} with w(k) = 1 or k, in closed form.
/// Throws DivergentSeries for c <= 0 and Precondition for m < 1.
double geometric_tail(double c, int m, TailWeight weight);

/// Closed-form Wirtinger bound for the Gaussian at omega = 1/2.
struct GaussianCertificate {
  /// sum_{k>=1} e^{-2 pi (k + 1/2)} = e^{-pi} / (e^{2 pi} - 1)
  double tail0 = 0.0;
  /// sum_{k>=1} k e^{-2 pi (k + 1/2)} = e^{pi} / (e^{2 pi} - 1)^2
  double tail1 = 0.0;
  /// Lower bound on sum_k |phi(k + 1/2)|^2 from the terms k = -1, 0.
  double numerator_lb = 0.0;
  /// Upper bound on sum_k (k + 1/2)^2 |phi(k + 1/2)|^2.
  double denominator_ub = 0.0;
  double ratio_lb = 0.0;
  /// Largest co-volume for which the bound certifies a frame.
  double certified_delta = 0.0;
};

GaussianCertificate gaussian_certificate();

}  // namespace gabor
