#include "gabor/gaussian_certificate.hpp"

#include <cmath>
#include <numbers>

#include "gabor/error.hpp"

namespace gabor {

namespace {
constexpr double kRoundoff = 1e-14;
}

double geometric_tail(double c, int m, TailWeight weight) {
  if (!(c > 0.0)) throw Error(ErrorKind::DivergentSeries, "geometric tail needs c > 0");
  if (m < 1) throw Error(ErrorKind::Precondition, "geometric tail needs m >= 1");
  // r = e^{-c}; 1 - r computed as -expm1(-c) to keep precision for small c.
  const double one_minus_r = -std::expm1(-c);
  const double lead = std::exp(-c * (m + 0.5));
  if (weight == TailWeight::Unit) {
    // sum_{k>=m} r^{k+1/2} = r^{m+1/2} / (1 - r)
    return lead / one_minus_r;
  }
  // sum_{k>=m} k r^k = r^m (m - (m - 1) r) / (1 - r)^2, times r^{1/2}.
  const double r = std::exp(-c);
  return lead * (m - (m - 1) * r) / (one_minus_r * one_minus_r);
}

GaussianCertificate gaussian_certificate() {
  constexpr double pi = std::numbers::pi;
  GaussianCertificate cert;
  cert.tail0 = geometric_tail(2.0 * pi, 1, TailWeight::Unit);
  cert.tail1 = geometric_tail(2.0 * pi, 1, TailWeight::Linear);
  cert.numerator_lb = 2.0 * std::exp(-pi / 2.0);
  // sum_k (k+1/2)^2 e^{-2 pi (k+1/2)^2} = 2 sum_{k>=0} (same). The k = 0 term
  // gives e^{-pi/2} / 4. For k >= 1 put x = (k+1/2)^2 >= k+1/2 > 1/(2 pi):
  // x e^{-2 pi x} is decreasing there, so each term is at most
  // (k+1/2) e^{-2 pi (k+1/2)}, and 2 sum_{k>=1} (k+1/2) e^{-2 pi (k+1/2)}
  // = 2 tail1 + tail0.
  cert.denominator_ub = std::exp(-pi / 2.0) / 2.0 + 2.0 * cert.tail1 + cert.tail0;
  cert.ratio_lb = cert.numerator_lb / cert.denominator_ub * (1.0 - kRoundoff);
  cert.certified_delta = 0.5 * std::sqrt(cert.ratio_lb) * (1.0 - kRoundoff);
  return cert;
}

}  // namespace gabor
