#pragma once

#include <span>
#include <string>
#include <vector>

#include "gabor/window.hpp"

namespace gabor {

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr int kDefaultGridPoints = 1001;
inline constexpr int kMaxTerms = 1'000'000;

/// Sum over |k| <= terms_used of (k + omega)^{2p} |g^(k + omega)|^2.
/// tail_bound bounds everything beyond; it is certified only when
/// `rigorous` (the window carries an envelope).
struct LatticeSumResult {
  double value = 0.0;
  double tail_bound = 0.0;
  int terms_used = 0;
  bool rigorous = true;
};

/// Closed-form bound on sum_{|k| > K} (k + omega)^{2p} |g^(k + omega)|^2 from
/// the envelope (C, alpha): 2 f(K) / (1 - rho) with f(x) = C^2 x^{2p} e^{-2 alpha x^2}
/// and rho = f(K + 1) / f(K). Returns +inf where the bound does not apply
/// (K below the envelope threshold, or f not yet decreasing).
double envelope_tail_bound(const Envelope& env, int power, int terms);
/// Same bound in the log domain.
double envelope_log_tail_bound(const Envelope& env, int power, int terms);

/// Truncated at |k| <= tail_tol-driven K. Throws ZeroSum if every term
/// vanishes and Precondition on bad arguments.
LatticeSumResult lattice_sum(const Window& w, double omega, int power,
                             double tail_tol = kDefaultTailTol);

/// Fixed truncation |k| <= terms; the tail bound is reported but not enforced.
LatticeSumResult lattice_sum_truncated(const Window& w, double omega, int power, int terms);

/// delta_g(omega) = (1/2) sqrt(N / D) together with the enclosure obtained
/// from the two tail bounds and a relative round-off allowance.
struct DeltaEstimate {
  double omega = 0.0;
  double value = 0.0;
  double low = 0.0;
  double high = 0.0;
  LatticeSumResult numerator;
  LatticeSumResult denominator;
};

/// Throws ZeroSum (N = 0) or Degenerate (D = 0).
DeltaEstimate delta_g(const Window& w, double omega, double tail_tol = kDefaultTailTol);

enum class PointStatus { Ok, ZeroSum, Degenerate };

struct DensityProfile {
  std::vector<double> omegas;
  std::vector<DeltaEstimate> deltas;
  std::vector<PointStatus> status;
  /// Points added by local bisection around the grid argmin.
  std::vector<DeltaEstimate> refinements;
  /// Minimum of the certified lower enclosures over grid and refinement points.
  double min_value = 0.0;
  /// Grid index of the smallest point value.
  std::size_t argmin = 0;
  /// Location of the smallest point value after refinement.
  double argmin_omega = 0.0;
  double tail_tol = kDefaultTailTol;
  /// False if any point was ZeroSum or Degenerate.
  bool certifying = true;
  /// False if the window has no envelope.
  bool rigorous = true;
  /// True only when the window declares its minimiser and it lies on the grid;
  /// otherwise min_value is a grid minimum, not a proven global one.
  bool global_minimum = false;
};

/// grid_points must be odd and >= 3 so that 0, 1/2 and 1 are on the grid.
DensityProfile min_delta(const Window& w, int grid_points = kDefaultGridPoints,
                         double tail_tol = kDefaultTailTol);

enum class VerdictStatus { Certified, Inconclusive };
const char* to_string(VerdictStatus status);

/// One-sided: the criterion can certify a frame, never rule one out.
struct CriterionVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  double delta_tested = 0.0;
  double min_delta_g = 0.0;
  double margin = 0.0;
  double argmin_omega = 0.0;
  bool rigorous = true;
  bool global_minimum = false;
};

/// Wirtinger test for G(w, delta Z x Z). Throws Degenerate/ZeroSum when the
/// profile has such points.
CriterionVerdict certify(const Window& w, double delta, int grid_points = kDefaultGridPoints,
                         double tail_tol = kDefaultTailTol);

/// Verdict for G(w, aZ x bZ) via the unitarily equivalent G(D_b w, ab Z x Z).
CriterionVerdict certify_rect(const Window& w, double a, double b,
                              int grid_points = kDefaultGridPoints,
                              double tail_tol = kDefaultTailTol);

/// Both sides of int_0^1 |f|^2 <= (4/pi^2) int_0^1 |f'|^2 from samples of f
/// on a uniform grid over [0, 1] (>= 101 points, f(0) f(1) = 0).
struct WirtingerSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
WirtingerSides wirtinger_residual(std::span<const double> samples);

}  // namespace gabor
