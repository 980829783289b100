#pragma once

#include <array>
#include <functional>

#include "gabor/sampled_function.hpp"
#include "gabor/window.hpp"

namespace gabor {

inline constexpr double kStandardStep = 0.01;
inline constexpr double kStandardHalfWidth = 8.0;

/// Samples of w on the symmetric grid over [-half_width, half_width].
SampledFunction sample(const Window& w, double step = kStandardStep,
                       double half_width = kStandardHalfWidth);

/// Fractional Fourier transform
///   F_r f(s) = int f(t) k_r(s, t) dt,
///   k_r(s, t) = sqrt(1 - i cot r) exp(pi i (cot r s^2 - 2 csc r s t + cot r t^2)),
/// by trapezoid quadrature on f's grid. r is reduced to (-pi, pi]; r = 0 is the
/// identity and r = pi the reflection f(-t). Angles within 1e-6 of a multiple
/// of pi otherwise throw DegenerateAngle.
SampledFunction frac_fourier(const SampledFunction& f, double r);

/// e^{pi i q t^2} f(t).
SampledFunction chirp(const SampledFunction& f, double q);

/// D_a f(t) = a^{-1/2} f(t / a), resampled on f's grid by linear interpolation.
SampledFunction dilate(const SampledFunction& f, double a);

struct MetaplecticOp {
  enum class Kind { FracFourier, Chirp, Dilation };
  Kind kind;
  double parameter;

  /// Whether the operator is exact up to rounding (no quadrature).
  bool exact() const { return kind == Kind::Chirp; }
};

SampledFunction apply(const MetaplecticOp& op, const SampledFunction& f);

/// max_t |out(t) - s out(-t)| / max |out| with s = +1 for even and -1 for
/// odd input. Throws Precondition if f is neither even nor odd.
double parity_residual(const MetaplecticOp& op, const SampledFunction& f);

/// Lazily evaluated function of t; compositions are evaluated pointwise so
/// that interpolation happens once, at the final lookup into the samples.
using Signal = std::function<Complex(double)>;

Signal as_signal(const SampledFunction& f);
Signal translate(Signal f, double x);
Signal modulate(Signal f, double omega);
Signal dilate(Signal f, double a);
/// pi(z) = M_omega T_x for z = (x, omega).
Signal time_frequency_shift(Signal f, std::array<double, 2> z);

/// Max over f's grid of |D_a pi(z) D_a^{-1} f - pi(D_a z) f|, relative to max |f|.
double intertwining_residual(double a, std::array<double, 2> z, const SampledFunction& f);

}  // namespace gabor
