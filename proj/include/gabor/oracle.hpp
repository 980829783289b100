#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gabor/window.hpp"

namespace gabor {

/// Gabor system on C^N over the lattice pZ_N x qZ_N: atoms
/// g_{k,l}[n] = e^{2 pi i l q n / N} g[n - k p mod N].
///
/// A continuous system G(w, aZ x bZ) maps onto it with sample step h = a / p
/// and q / (N h) = b, so the co-volume becomes p q / N.
struct FiniteGaborModel {
  int N = 0;
  int time_step = 1;  // p
  int freq_step = 1;  // q
  std::vector<Complex> window;  // unit l2 norm
  double sample_step = 0.0;     // h
  double snapped_a = 0.0;
  double snapped_b = 0.0;

  double covolume() const { return static_cast<double>(time_step) * freq_step / N; }
  int atom_count() const { return (N / time_step) * (N / freq_step); }
};

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  /// max |S - S^*| before symmetrisation.
  double asymmetry = 0.0;

  double ratio() const { return B > 0.0 ? A / B : 0.0; }
};

inline constexpr int kDefaultModelSize = 240;
inline constexpr double kSnapTolerance = 0.01;

/// Builds the model for G(w, aZ x bZ). Among divisor pairs (p, q) of N it
/// keeps those with |pq / (N ab) - 1| minimal and within 1%, then picks the
/// one with N h^2 closest to 1 (equal time and frequency coverage). The window
/// is sampled at t = n h, periodised over five periods and normalised.
/// Throws ParameterNotRepresentable when no pair is within tolerance.
FiniteGaborModel make_model(const Window& w, double a, double b, int N = kDefaultModelSize);

/// Model with explicit steps and window samples (normalised on entry).
FiniteGaborModel make_model(std::vector<Complex> window, int time_step, int freq_step);

/// sum over atoms of g_{k,l} g_{k,l}^*
Eigen::MatrixXcd frame_operator(const FiniteGaborModel& m);

/// Extreme eigenvalues of the symmetrised frame operator.
FrameBounds finite_frame_bounds(const FiniteGaborModel& m);

struct EquivalenceReport {
  FrameBounds bounds_rect;
  FrameBounds bounds_square;
  FiniteGaborModel model_rect;
  FiniteGaborModel model_square;
  double rel_gap = 0.0;
};

/// Finite models of G(w, aZ x bZ) and G(D_b w, ab Z x Z) and the gap between
/// their bound ratios A/B.
EquivalenceReport equivalence_check(const Window& w, double a, double b,
                                    int N = kDefaultModelSize);

}  // namespace gabor
