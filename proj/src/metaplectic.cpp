#include "gabor/metaplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gabor/error.hpp"

namespace gabor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateWindow = 1e-6;
constexpr double kExactAngle = 1e-12;

// Reduce to (-pi, pi].
double reduce_angle(double r) {
  double x = std::remainder(r, 2.0 * kPi);
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

}  // namespace

SampledFunction sample(const Window& w, double step, double half_width) {
  SampledFunction f;
  f.grid = UniformGrid::symmetric(half_width, step);
  f.values.resize(f.grid.size);
  for (std::size_t i = 0; i < f.grid.size; ++i) f.values[i] = w.time(f.grid.at(i));
  return f;
}

SampledFunction frac_fourier(const SampledFunction& f, double r) {
  const double x = reduce_angle(r);
  if (std::abs(x) <= kExactAngle) return f;
  if (std::abs(kPi - std::abs(x)) <= kExactAngle) {
    // Reflection: exact on a symmetric grid.
    SampledFunction out = f;
    std::reverse(out.values.begin(), out.values.end());
    return out;
  }
  if (std::abs(x) < kDegenerateWindow || kPi - std::abs(x) < kDegenerateWindow) {
    throw Error(ErrorKind::DegenerateAngle,
                "fractional Fourier angle within 1e-6 of a multiple of pi; use r = 0 or r = pi");
  }

  const double cot = std::cos(x) / std::sin(x);
  const double csc = 1.0 / std::sin(x);
  const Complex amplitude = std::sqrt(Complex(1.0, -cot));
  const auto& grid = f.grid;
  const std::size_t n = grid.size;

  // Inner chirp and quadrature weights are shared by every output point.
  std::vector<Complex> weighted(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = grid.at(j);
    const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    weighted[j] = w * grid.step * f.values[j] * std::polar(1.0, kPi * cot * t * t);
  }

  SampledFunction out;
  out.grid = grid;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = grid.at(i);
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) {
      if (weighted[j] == Complex{}) continue;
      acc += weighted[j] * std::polar(1.0, -2.0 * kPi * csc * s * grid.at(j));
    }
    out.values[i] = amplitude * std::polar(1.0, kPi * cot * s * s) * acc;
  }
  return out;
}

SampledFunction chirp(const SampledFunction& f, double q) {
  SampledFunction out = f;
  for (std::size_t i = 0; i < out.grid.size; ++i) {
    const double t = out.grid.at(i);
    out.values[i] *= std::polar(1.0, kPi * q * t * t);
  }
  return out;
}

SampledFunction dilate(const SampledFunction& f, double a) {
  if (!(a > 0.0)) throw Error(ErrorKind::Domain, "dilation factor must be positive");
  if (a == 1.0) return f;
  SampledFunction out;
  out.grid = f.grid;
  out.values.resize(f.grid.size);
  const double scale = 1.0 / std::sqrt(a);
  for (std::size_t i = 0; i < f.grid.size; ++i) out.values[i] = scale * f.at(f.grid.at(i) / a);
  return out;
}

SampledFunction apply(const MetaplecticOp& op, const SampledFunction& f) {
  switch (op.kind) {
    case MetaplecticOp::Kind::FracFourier: return frac_fourier(f, op.parameter);
    case MetaplecticOp::Kind::Chirp: return chirp(f, op.parameter);
    case MetaplecticOp::Kind::Dilation: return dilate(f, op.parameter);
  }
  return f;
}

namespace {

// Symmetry residuals (even, odd) relative to max |f|, assuming a symmetric grid.
std::pair<double, double> symmetry_residuals(const SampledFunction& f) {
  const double scale = f.max_abs();
  double even = 0.0;
  double odd = 0.0;
  const std::size_t n = f.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    even = std::max(even, std::abs(f.values[i] - f.values[n - 1 - i]));
    odd = std::max(odd, std::abs(f.values[i] + f.values[n - 1 - i]));
  }
  if (scale == 0.0) return {0.0, 0.0};
  return {even / scale, odd / scale};
}

}  // namespace

double parity_residual(const MetaplecticOp& op, const SampledFunction& f) {
  if (!f.symmetric()) throw Error(ErrorKind::Precondition, "grid must be symmetric about 0");
  const auto [even_in, odd_in] = symmetry_residuals(f);
  constexpr double kClassify = 1e-10;
  if (even_in >= kClassify && odd_in >= kClassify) {
    throw Error(ErrorKind::Precondition, "input is neither even nor odd");
  }
  const bool odd = odd_in < kClassify;
  const auto [even_out, odd_out] = symmetry_residuals(apply(op, f));
  return odd ? odd_out : even_out;
}

Signal as_signal(const SampledFunction& f) {
  return [f](double t) { return f.at(t); };
}

Signal translate(Signal f, double x) {
  return [f = std::move(f), x](double t) { return f(t - x); };
}

Signal modulate(Signal f, double omega) {
  return [f = std::move(f), omega](double t) {
    return std::polar(1.0, 2.0 * kPi * omega * t) * f(t);
  };
}

Signal dilate(Signal f, double a) {
  if (!(a > 0.0)) throw Error(ErrorKind::Domain, "dilation factor must be positive");
  return [f = std::move(f), a](double t) { return f(t / a) / std::sqrt(a); };
}

Signal time_frequency_shift(Signal f, std::array<double, 2> z) {
  return modulate(translate(std::move(f), z[0]), z[1]);
}

double intertwining_residual(double a, std::array<double, 2> z, const SampledFunction& f) {
  const Signal base = as_signal(f);
  const Signal lhs = dilate(time_frequency_shift(dilate(base, 1.0 / a), z), a);
  const Signal rhs = time_frequency_shift(base, {a * z[0], z[1] / a});
  double residual = 0.0;
  for (std::size_t i = 0; i < f.grid.size; ++i) {
    const double t = f.grid.at(i);
    residual = std::max(residual, std::abs(lhs(t) - rhs(t)));
  }
  const double scale = f.max_abs();
  return scale > 0.0 ? residual / scale : residual;
}

}  // namespace gabor
