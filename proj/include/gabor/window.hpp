#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gabor/sampled_function.hpp"

namespace gabor {

enum class WindowKind { Gaussian, Hermite, Sampled, Dilated, Chirped, Combination, Custom };
enum class Parity { Even, Odd, Neither, Unknown };

const char* to_string(WindowKind kind);
const char* to_string(Parity parity);

/// Gaussian-type bound on the Fourier transform:
///   |g^(xi)| <= constant * exp(-exponent * xi^2)   for |xi| >= threshold.
struct Envelope {
  double constant = 0.0;
  double exponent = 0.0;
  double threshold = 1.0;

  double bound(double xi) const { return constant * std::exp(-exponent * xi * xi); }
};

namespace detail {

class WindowModel {
 public:
  virtual ~WindowModel() = default;
  virtual Complex time(double t) const = 0;
  virtual Complex freq(double xi) const = 0;
  /// log |g^(xi)|. Closed-form models override this so that values far
  /// below the double range keep their magnitude.
  virtual double log_abs_freq(double xi) const { return std::log(std::abs(freq(xi))); }
};

}  // namespace detail

/// Immutable window function with time and frequency evaluation. Cheap to
/// copy; copies share the underlying model and may be evaluated from several
/// threads at once.
class Window {
 public:
  Complex time(double t) const { return model_->time(t); }
  Complex freq(double xi) const { return model_->freq(xi); }
  double log_abs_freq(double xi) const { return model_->log_abs_freq(xi); }

  WindowKind kind() const { return kind_; }
  Parity parity() const { return parity_; }
  const std::optional<Envelope>& envelope() const { return envelope_; }
  const std::string& label() const { return label_; }
  /// Only windows with an envelope get rigorous truncation bounds downstream.
  bool rigorous() const { return envelope_.has_value(); }
  /// Frequency offset known to minimise the density bound, if any.
  std::optional<double> known_minimizer() const { return known_minimizer_; }

  /// Escape hatch for windows given by callables. `parity` is trusted as
  /// declared; pass Parity::Unknown to leave classification to probing.
  static Window custom(std::string label, std::function<Complex(double)> time,
                       std::function<Complex(double)> freq, Parity parity,
                       std::optional<Envelope> envelope);

 private:
  friend Window gaussian();
  friend Window hermite(int n);
  friend Window dilate(const Window& w, double b);
  friend Window chirped(const Window& w, double q);
  friend Window sampled(SampledFunction samples, std::string label);
  friend Window combine(const std::vector<std::pair<Complex, Window>>& terms);

  Window(std::shared_ptr<const detail::WindowModel> model, WindowKind kind, Parity parity,
         std::optional<Envelope> envelope, std::string label)
      : model_(std::move(model)),
        kind_(kind),
        parity_(parity),
        envelope_(envelope),
        label_(std::move(label)) {}

  std::shared_ptr<const detail::WindowModel> model_;
  WindowKind kind_;
  Parity parity_;
  std::optional<Envelope> envelope_;
  std::string label_;
  std::optional<double> known_minimizer_;
};

/// e^{-pi t^2}; its own Fourier transform.
Window gaussian();

/// Hermite function h_n(t) = p_n(t) e^{-pi t^2} with p_n monic of degree n,
/// so h_0 is the Gaussian and h_1(t) = t e^{-pi t^2}. Fourier convention:
/// h_n^ = (-i)^n h_n.
Window hermite(int n);

/// Unitary dilation D_b g(t) = b^{-1/2} g(t / b). Throws on b <= 0.
Window dilate(const Window& w, double b);

/// e^{pi i q t^2} g(t). The transform has no closed form and is computed
/// by quadrature; no envelope is attached.
Window chirped(const Window& w, double q);

/// Window backed by samples. The grid must be symmetric about 0 with spacing
/// at most 0.01. No envelope, so truncation downstream is heuristic.
Window sampled(SampledFunction samples, std::string label = "sampled");

/// Sum of c_i * w_i. Envelopes combine when all terms carry one.
Window combine(const std::vector<std::pair<Complex, Window>>& terms);

/// Even/Odd if the symmetry residual on 201 probes over [-5, 5] is below
/// 1e-10 relative to the largest probe magnitude, Neither otherwise.
/// Unknown for a window that vanishes on every probe.
Parity classify_parity(const Window& w);

/// Checks the envelope against |g^| at `probes` points with |xi| in
/// [max(1, threshold), 10], on both sides of the origin.
bool verify_envelope(const Window& w, int probes = 200);

/// Coefficients of the monic polynomial p_n, lowest degree first.
std::vector<double> hermite_polynomial(int n);

}  // namespace gabor
