#include "gabor/window.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gabor/error.hpp"

namespace gabor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Quadrature used for transforms without a closed form.
constexpr double kQuadratureHalfWidth = 8.0;
constexpr double kQuadratureStep = 1.0 / 128.0;

double hermite_poly_eval(int n, double t) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = t;
  for (int k = 1; k < n; ++k) {
    const double next = t * cur - (k / (4.0 * kPi)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// (-i)^n
Complex minus_i_pow(int n) {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

Complex trapezoid_transform(const std::function<Complex(double)>& g, double xi) {
  const auto grid = UniformGrid::symmetric(kQuadratureHalfWidth, kQuadratureStep);
  Complex acc{};
  for (std::size_t j = 0; j < grid.size; ++j) {
    const double t = grid.at(j);
    const double w = (j == 0 || j + 1 == grid.size) ? 0.5 : 1.0;
    acc += w * g(t) * std::polar(1.0, -2.0 * kPi * xi * t);
  }
  return acc * grid.step;
}

class GaussianModel final : public detail::WindowModel {
 public:
  Complex time(double t) const override { return std::exp(-kPi * t * t); }
  Complex freq(double xi) const override { return std::exp(-kPi * xi * xi); }
  double log_abs_freq(double xi) const override { return -kPi * xi * xi; }
};

class HermiteModel final : public detail::WindowModel {
 public:
  explicit HermiteModel(int n) : n_(n), phase_(minus_i_pow(n)) {}
  Complex time(double t) const override {
    return hermite_poly_eval(n_, t) * std::exp(-kPi * t * t);
  }
  Complex freq(double xi) const override { return phase_ * time(xi); }
  double log_abs_freq(double xi) const override {
    return std::log(std::abs(hermite_poly_eval(n_, xi))) - kPi * xi * xi;
  }

 private:
  int n_;
  Complex phase_;
};

class DilatedModel final : public detail::WindowModel {
 public:
  DilatedModel(Window base, double b) : base_(std::move(base)), b_(b) {}
  Complex time(double t) const override { return base_.time(t / b_) / std::sqrt(b_); }
  Complex freq(double xi) const override { return std::sqrt(b_) * base_.freq(b_ * xi); }
  double log_abs_freq(double xi) const override {
    return 0.5 * std::log(b_) + base_.log_abs_freq(b_ * xi);
  }

 private:
  Window base_;
  double b_;
};

class ChirpedModel final : public detail::WindowModel {
 public:
  ChirpedModel(Window base, double q) : base_(std::move(base)), q_(q) {}
  Complex time(double t) const override {
    return std::polar(1.0, kPi * q_ * t * t) * base_.time(t);
  }
  Complex freq(double xi) const override {
    return trapezoid_transform([this](double t) { return time(t); }, xi);
  }

 private:
  Window base_;
  double q_;
};

class SampledModel final : public detail::WindowModel {
 public:
  explicit SampledModel(SampledFunction f) : f_(std::move(f)) {}
  Complex time(double t) const override { return f_.at(t); }
  Complex freq(double xi) const override {
    Complex acc{};
    const auto n = f_.grid.size;
    for (std::size_t j = 0; j < n; ++j) {
      const double t = f_.grid.at(j);
      const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      acc += w * f_.values[j] * std::polar(1.0, -2.0 * kPi * xi * t);
    }
    return acc * f_.grid.step;
  }

 private:
  SampledFunction f_;
};

class CombinationModel final : public detail::WindowModel {
 public:
  explicit CombinationModel(std::vector<std::pair<Complex, Window>> terms)
      : terms_(std::move(terms)) {}
  Complex time(double t) const override {
    Complex acc{};
    for (const auto& [c, w] : terms_) acc += c * w.time(t);
    return acc;
  }
  Complex freq(double xi) const override {
    Complex acc{};
    for (const auto& [c, w] : terms_) acc += c * w.freq(xi);
    return acc;
  }

 private:
  std::vector<std::pair<Complex, Window>> terms_;
};

class CustomModel final : public detail::WindowModel {
 public:
  CustomModel(std::function<Complex(double)> time, std::function<Complex(double)> freq)
      : time_(std::move(time)), freq_(std::move(freq)) {}
  Complex time(double t) const override { return time_(t); }
  Complex freq(double xi) const override { return freq_(xi); }

 private:
  std::function<Complex(double)> time_;
  std::function<Complex(double)> freq_;
};

std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) return format_number(c.real());
  return "(" + format_number(c.real()) + (c.imag() < 0.0 ? "" : "+") + format_number(c.imag()) + "i)";
}

// max_{x >= 1} x^j e^{-beta x^2}
double monomial_gaussian_max(int j, double beta) {
  const double peak_sq = j / (2.0 * beta);
  if (peak_sq <= 1.0) return std::exp(-beta);
  return std::pow(peak_sq, 0.5 * j) * std::exp(-0.5 * j);
}

}  // namespace

const char* to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::Gaussian: return "gaussian";
    case WindowKind::Hermite: return "hermite";
    case WindowKind::Sampled: return "sampled";
    case WindowKind::Dilated: return "dilated";
    case WindowKind::Chirped: return "chirped";
    case WindowKind::Combination: return "combination";
    case WindowKind::Custom: return "custom";
  }
  return "?";
}

const char* to_string(Parity parity) {
  switch (parity) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
    case Parity::Unknown: return "unknown";
  }
  return "?";
}

std::vector<double> hermite_polynomial(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "hermite order must be nonnegative");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= (k / (4.0 * kPi)) * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Window Window::custom(std::string label, std::function<Complex(double)> time,
                      std::function<Complex(double)> freq, Parity parity,
                      std::optional<Envelope> envelope) {
  return Window(std::make_shared<CustomModel>(std::move(time), std::move(freq)),
                WindowKind::Custom, parity, envelope, std::move(label));
}

Window gaussian() {
  Window w(std::make_shared<GaussianModel>(), WindowKind::Gaussian, Parity::Even,
           Envelope{1.0, kPi, 1.0}, "gaussian");
  w.known_minimizer_ = 0.5;
  return w;
}

Window hermite(int n) {
  const auto coeffs = hermite_polynomial(n);
  // Split e^{-pi xi^2} as e^{-(pi/2) xi^2} * e^{-(pi/2) xi^2}: the first
  // factor absorbs the polynomial, the second is the envelope.
  constexpr double beta = kPi / 2.0;
  double constant = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    constant += std::abs(coeffs[j]) * monomial_gaussian_max(static_cast<int>(j), beta);
  }
  return Window(std::make_shared<HermiteModel>(n), WindowKind::Hermite,
                n % 2 == 0 ? Parity::Even : Parity::Odd,
                Envelope{constant, kPi - beta, 1.0}, "hermite:" + std::to_string(n));
}

Window dilate(const Window& w, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw Error(ErrorKind::Domain, "dilation factor must be positive, got " + format_number(b));
  }
  std::optional<Envelope> env;
  if (w.envelope()) {
    const auto& e = *w.envelope();
    env = Envelope{e.constant * std::sqrt(b), e.exponent * b * b, e.threshold / b};
  }
  return Window(std::make_shared<DilatedModel>(w, b), WindowKind::Dilated, w.parity(), env,
                "dilate(" + w.label() + "," + format_number(b) + ")");
}

Window chirped(const Window& w, double q) {
  return Window(std::make_shared<ChirpedModel>(w, q), WindowKind::Chirped, w.parity(),
                std::nullopt, "chirp(" + w.label() + "," + format_number(q) + ")");
}

Window sampled(SampledFunction samples, std::string label) {
  if (samples.grid.size < 3 || samples.values.size() != samples.grid.size) {
    throw Error(ErrorKind::Precondition, "sampled window needs at least 3 matching samples");
  }
  if (!(samples.grid.step > 0.0) || samples.grid.step > 0.01 + 1e-12) {
    throw Error(ErrorKind::Precondition, "sampled window spacing must be in (0, 0.01]");
  }
  if (!samples.symmetric()) {
    throw Error(ErrorKind::Precondition, "sampled window grid must be symmetric about 0");
  }
  for (const auto& v : samples.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::Precondition, "sampled window has non-finite values");
    }
  }
  Window w(std::make_shared<SampledModel>(std::move(samples)), WindowKind::Sampled,
           Parity::Unknown, std::nullopt, std::move(label));
  w.parity_ = classify_parity(w);
  return w;
}

Window combine(const std::vector<std::pair<Complex, Window>>& terms) {
  if (terms.empty()) throw Error(ErrorKind::Precondition, "empty window combination");
  bool all_even = true;
  bool all_odd = true;
  bool all_enveloped = true;
  Envelope env{0.0, std::numeric_limits<double>::infinity(), 1.0};
  std::string label;
  for (const auto& [c, w] : terms) {
    all_even = all_even && w.parity() == Parity::Even;
    all_odd = all_odd && w.parity() == Parity::Odd;
    if (w.envelope()) {
      env.constant += std::abs(c) * w.envelope()->constant;
      env.exponent = std::min(env.exponent, w.envelope()->exponent);
      env.threshold = std::max(env.threshold, w.envelope()->threshold);
    } else {
      all_enveloped = false;
    }
    if (!label.empty()) label += "+";
    if (c != Complex{1.0, 0.0}) label += format_coefficient(c) + "*";
    label += w.label();
  }
  Parity parity = all_even ? Parity::Even : all_odd ? Parity::Odd : Parity::Unknown;
  Window w(std::make_shared<CombinationModel>(terms), WindowKind::Combination, parity,
           all_enveloped ? std::optional<Envelope>(env) : std::nullopt, label);
  if (parity == Parity::Unknown) w.parity_ = classify_parity(w);
  return w;
}

Parity classify_parity(const Window& w) {
  constexpr int kProbes = 201;
  constexpr double kHalfWidth = 5.0;
  double scale = 0.0;
  double odd_residual = 0.0;
  double even_residual = 0.0;
  for (int i = 0; i < kProbes; ++i) {
    const double t = -kHalfWidth + 2.0 * kHalfWidth * i / (kProbes - 1);
    const Complex g_pos = w.time(t);
    const Complex g_neg = w.time(-t);
    scale = std::max(scale, std::abs(g_pos));
    odd_residual = std::max(odd_residual, std::abs(g_pos + g_neg));
    even_residual = std::max(even_residual, std::abs(g_pos - g_neg));
  }
  if (scale == 0.0) return Parity::Unknown;
  if (odd_residual < 1e-10 * scale) return Parity::Odd;
  if (even_residual < 1e-10 * scale) return Parity::Even;
  return Parity::Neither;
}

bool verify_envelope(const Window& w, int probes) {
  if (!w.envelope()) return false;
  const auto& env = *w.envelope();
  const double lo = std::max(1.0, env.threshold);
  if (lo >= 10.0) return true;
  for (int i = 0; i < probes; ++i) {
    const double xi = lo + (10.0 - lo) * i / std::max(1, probes - 1);
    const double bound = env.bound(xi) * (1.0 + 1e-12);
    if (std::abs(w.freq(xi)) > bound || std::abs(w.freq(-xi)) > bound) return false;
  }
  return true;
}

}  // namespace gabor
