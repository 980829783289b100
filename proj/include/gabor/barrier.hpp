#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gabor/criterion.hpp"
#include "gabor/window.hpp"

namespace gabor {

/// Density bound at omega = 0 and the certificate that it lies below 1/2.
///
/// delta0 < 1/2 is equivalent to num0 < den0, and den0 - num0 equals
///   gap = sum_{|k| >= 2} (k^2 - 1) |g^(k)|^2 - |g^(0)|^2
/// because the k = +-1 terms cancel. Every term of the sum is nonnegative,
/// so any partial sum is a lower bound. The gap is accumulated in the log
/// domain, which keeps the certificate meaningful when 1/2 - delta0 is far
/// below the double range (large dilations of h_1).
struct BarrierReport {
  std::string window_id;
  Parity parity = Parity::Unknown;
  double num0 = 0.0;
  double den0 = 0.0;
  double delta0 = 0.0;
  double delta0_low = 0.0;
  /// min(double enclosure, 1/2 - exp(log_gap_to_half)); may round to 0.5.
  double delta0_high = 0.0;
  /// |g^(0)|^2
  double ghat0 = 0.0;
  /// Certified lower bound on ln(1/2 - delta0); -inf when no certificate.
  double log_gap_to_half = 0.0;
  /// num0 < den0, certified.
  bool strict = false;
  bool rigorous = true;
};

BarrierReport delta_at_zero(const Window& w, double tail_tol = kDefaultTailTol);

struct BarrierScanRow {
  double b = 0.0;
  double delta0_low = 0.0;
  double delta0 = 0.0;
  double delta0_high = 0.0;
  double log_gap_to_half = 0.0;

  /// The certified upper enclosure is 1/2 - exp(log_gap_to_half), which is
  /// below 1/2 even where delta0_high has rounded to 0.5 (b beyond about 1.6).
  bool certified_below_half() const {
    return delta0_high < 0.5 || std::isfinite(log_gap_to_half);
  }
};

/// delta_{phi_b}(0) for the dilated first Hermite function phi_b = D_b h_1
/// on a log-uniform grid of `steps` values of b in [b_min, b_max], from the
/// closed-form sums sum k^2 e^{-2 pi b^2 k^2} and sum k^4 e^{-2 pi b^2 k^2}.
std::vector<BarrierScanRow> h1_barrier_scan(double b_min, double b_max, int steps,
                                            double tail_tol = kDefaultTailTol);

/// Reports for a corpus of odd windows. Throws Precondition naming the first
/// window that does not classify as odd.
std::vector<BarrierReport> odd_barrier_suite(const std::vector<Window>& corpus,
                                             double tail_tol = kDefaultTailTol);

}  // namespace gabor
