#include "gabor/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gabor/error.hpp"
#include "gabor/summation.hpp"

namespace gabor {

namespace {

constexpr double kFloorGuard = 1e-30;
// Relative allowance for rounding in term evaluation and summation. Generous
// compared with the few-ulp errors of the closed-form evaluators.
constexpr double kRoundoff = 1e-12;
// Shell count for the heuristic stop used when no envelope is available.
constexpr int kHeuristicQuietShells = 3;
constexpr int kHeuristicMaxTerms = 64;

constexpr double kInf = std::numeric_limits<double>::infinity();

// |g^(k + omega)|^2 for |k| <= extent, filled on demand.
class TermCache {
 public:
  TermCache(const Window& w, double omega) : w_(w), omega_(omega) { extend(0); }

  void extend(int extent) {
    while (extent_ < extent) {
      ++extent_;
      pos_.push_back(std::norm(w_.freq(extent_ + omega_)));
      neg_.push_back(std::norm(w_.freq(-extent_ + omega_)));
    }
    if (zero_.empty()) zero_.push_back(std::norm(w_.freq(omega_)));
  }

  double abs2(int k) const {
    if (k == 0) return zero_[0];
    return k > 0 ? pos_[k - 1] : neg_[-k - 1];
  }

  double omega() const { return omega_; }

 private:
  const Window& w_;
  double omega_;
  int extent_ = 0;
  std::vector<double> zero_;
  std::vector<double> pos_;
  std::vector<double> neg_;
};

double weight(double x, int power) {
  double r = 1.0;
  for (int i = 0; i < power; ++i) r *= x * x;
  return r;
}

// Sum from the centre outward so that enlarging the range only appends terms.
double partial_sum(TermCache& cache, int power, int terms) {
  cache.extend(terms);
  CompensatedSum sum;
  const double omega = cache.omega();
  sum.add(weight(omega, power) * cache.abs2(0));
  for (int m = 1; m <= terms; ++m) {
    sum.add(weight(m + omega, power) * cache.abs2(m));
    sum.add(weight(-m + omega, power) * cache.abs2(-m));
  }
  return sum.value();
}

double shell(TermCache& cache, int power, int m) {
  cache.extend(m);
  const double omega = cache.omega();
  return weight(m + omega, power) * cache.abs2(m) + weight(-m + omega, power) * cache.abs2(-m);
}

void check_arguments(double omega, int power, double tail_tol) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw Error(ErrorKind::Precondition, "omega must lie in [0, 1]");
  }
  if (power < 0 || power > 2) throw Error(ErrorKind::Precondition, "power must be 0, 1 or 2");
  if (!(tail_tol > 0.0 && tail_tol <= 1e-2)) {
    throw Error(ErrorKind::Precondition, "tail tolerance must lie in (0, 1e-2]");
  }
}

LatticeSumResult sum_with_envelope(TermCache& cache, const Envelope& env, int power,
                                   double tail_tol) {
  int terms = std::max(1, static_cast<int>(std::ceil(env.threshold)));
  if (power > 0) {
    terms = std::max(terms, static_cast<int>(std::ceil(std::sqrt(power / (2.0 * env.exponent)))) + 1);
  }
  while (true) {
    const double value = partial_sum(cache, power, terms);
    const double tail = envelope_tail_bound(env, power, terms);
    if (tail <= tail_tol * std::max(value, kFloorGuard)) {
      if (value == 0.0) {
        throw Error(ErrorKind::ZeroSum, "every lattice term vanished");
      }
      return {value, tail, terms, true};
    }
    if (terms >= kMaxTerms) {
      if (value == 0.0) throw Error(ErrorKind::ZeroSum, "every lattice term vanished");
      throw Error(ErrorKind::Precondition, "lattice sum tail did not reach tolerance");
    }
    terms = std::min(kMaxTerms, terms + std::max(1, terms / 8));
  }
}

LatticeSumResult sum_heuristic(TermCache& cache, int power, double tail_tol) {
  int quiet = 0;
  int terms = 0;
  double value = partial_sum(cache, power, 0);
  double last_shell = 0.0;
  while (terms < kHeuristicMaxTerms) {
    ++terms;
    last_shell = shell(cache, power, terms);
    value = partial_sum(cache, power, terms);
    quiet = last_shell <= tail_tol * std::max(value, kFloorGuard) ? quiet + 1 : 0;
    if (quiet >= kHeuristicQuietShells) break;
  }
  if (value == 0.0) throw Error(ErrorKind::ZeroSum, "every lattice term vanished");
  return {value, 2.0 * last_shell, terms, false};
}

LatticeSumResult sum_cached(const Window& w, TermCache& cache, int power, double tail_tol) {
  if (w.envelope()) return sum_with_envelope(cache, *w.envelope(), power, tail_tol);
  return sum_heuristic(cache, power, tail_tol);
}

DeltaEstimate estimate(const Window& w, double omega, double tail_tol) {
  check_arguments(omega, 0, tail_tol);
  TermCache cache(w, omega);
  DeltaEstimate est;
  est.omega = omega;
  est.numerator = sum_cached(w, cache, 0, tail_tol);
  try {
    est.denominator = sum_cached(w, cache, 1, tail_tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroSum) throw;
    throw Error(ErrorKind::Degenerate,
                "denominator sum vanishes at omega = " + std::to_string(omega));
  }
  const double num = est.numerator.value;
  const double den = est.denominator.value;
  est.value = 0.5 * std::sqrt(num / den);
  est.low = 0.5 * std::sqrt(num / (den + est.denominator.tail_bound)) * (1.0 - kRoundoff);
  est.high = 0.5 * std::sqrt((num + est.numerator.tail_bound) / den) * (1.0 + kRoundoff);
  return est;
}

}  // namespace

double envelope_tail_bound(const Envelope& env, int power, int terms) {
  const double lt = envelope_log_tail_bound(env, power, terms);
  return lt == kInf ? kInf : std::exp(lt);
}

double envelope_log_tail_bound(const Envelope& env, int power, int terms) {
  const double k = terms;
  if (terms < 1 || k < env.threshold || !(env.exponent > 0.0)) return kInf;
  if (power > 0 && k * k <= power / (2.0 * env.exponent)) return kInf;
  if (env.constant == 0.0) return -kInf;
  const double log_ratio =
      2.0 * power * std::log1p(1.0 / k) - 2.0 * env.exponent * (2.0 * k + 1.0);
  if (log_ratio >= 0.0) return kInf;
  const double log_first =
      2.0 * std::log(env.constant) + 2.0 * power * std::log(k) - 2.0 * env.exponent * k * k;
  return std::log(2.0) + log_first - std::log(-std::expm1(log_ratio));
}

LatticeSumResult lattice_sum(const Window& w, double omega, int power, double tail_tol) {
  check_arguments(omega, power, tail_tol);
  TermCache cache(w, omega);
  return sum_cached(w, cache, power, tail_tol);
}

LatticeSumResult lattice_sum_truncated(const Window& w, double omega, int power, int terms) {
  check_arguments(omega, power, 1e-2);
  if (terms < 0) throw Error(ErrorKind::Precondition, "negative truncation");
  TermCache cache(w, omega);
  LatticeSumResult r;
  r.value = partial_sum(cache, power, terms);
  r.terms_used = terms;
  r.rigorous = w.envelope().has_value();
  r.tail_bound = r.rigorous ? envelope_tail_bound(*w.envelope(), power, terms) : kInf;
  return r;
}

DeltaEstimate delta_g(const Window& w, double omega, double tail_tol) {
  return estimate(w, omega, tail_tol);
}

DensityProfile min_delta(const Window& w, int grid_points, double tail_tol) {
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw Error(ErrorKind::Precondition, "grid_points must be odd and at least 3");
  }
  DensityProfile profile;
  profile.tail_tol = tail_tol;
  profile.rigorous = w.rigorous();
  const double step = 1.0 / (grid_points - 1);

  profile.omegas.resize(grid_points);
  profile.deltas.resize(grid_points);
  profile.status.assign(grid_points, PointStatus::Ok);
  for (int i = 0; i < grid_points; ++i) {
    const double omega = (i == grid_points - 1) ? 1.0 : i * step;
    profile.omegas[i] = omega;
    try {
      profile.deltas[i] = estimate(w, omega, tail_tol);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ZeroSum) {
        profile.status[i] = PointStatus::ZeroSum;
        profile.deltas[i] = {omega, std::nan(""), std::nan(""), std::nan(""), {}, {}};
      } else if (e.kind() == ErrorKind::Degenerate) {
        profile.status[i] = PointStatus::Degenerate;
        profile.deltas[i] = {omega, kInf, kInf, kInf, {}, {}};
      } else {
        throw;
      }
      profile.certifying = false;
    }
  }

  bool found = false;
  for (int i = 0; i < grid_points; ++i) {
    if (profile.status[i] != PointStatus::Ok) continue;
    if (!found || profile.deltas[i].value < profile.deltas[profile.argmin].value) {
      profile.argmin = i;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::Degenerate, "no grid point has a finite density bound");

  // Three levels of local bisection around the grid argmin.
  DeltaEstimate best = profile.deltas[profile.argmin];
  double offset = step / 2.0;
  for (int level = 0; level < 3; ++level, offset /= 2.0) {
    const double centre = best.omega;
    for (double omega : {centre - offset, centre + offset}) {
      if (omega < 0.0 || omega > 1.0) continue;
      try {
        auto est = estimate(w, omega, tail_tol);
        profile.refinements.push_back(est);
        if (est.value < best.value) best = est;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ZeroSum && e.kind() != ErrorKind::Degenerate) throw;
        profile.certifying = false;
      }
    }
  }
  profile.argmin_omega = best.omega;

  profile.min_value = kInf;
  for (int i = 0; i < grid_points; ++i) {
    if (profile.status[i] == PointStatus::Ok) {
      profile.min_value = std::min(profile.min_value, profile.deltas[i].low);
    }
  }
  for (const auto& est : profile.refinements) {
    profile.min_value = std::min(profile.min_value, est.low);
  }

  if (auto known = w.known_minimizer()) {
    const double pos = *known * (grid_points - 1);
    profile.global_minimum = std::abs(pos - std::round(pos)) < 1e-9;
  }
  return profile;
}

const char* to_string(VerdictStatus status) {
  return status == VerdictStatus::Certified ? "Certified" : "Inconclusive";
}

CriterionVerdict certify(const Window& w, double delta, int grid_points, double tail_tol) {
  if (!(delta > 0.0)) throw Error(ErrorKind::Precondition, "co-volume must be positive");
  const auto profile = min_delta(w, grid_points, tail_tol);
  if (!profile.certifying) {
    throw Error(ErrorKind::Degenerate,
                "density profile of " + w.label() + " has degenerate points");
  }
  CriterionVerdict v;
  v.delta_tested = delta;
  v.min_delta_g = profile.min_value;
  v.margin = profile.min_value - delta;
  v.argmin_omega = profile.argmin_omega;
  v.rigorous = profile.rigorous;
  v.global_minimum = profile.global_minimum;
  v.status = v.margin > 0.0 ? VerdictStatus::Certified : VerdictStatus::Inconclusive;
  return v;
}

CriterionVerdict certify_rect(const Window& w, double a, double b, int grid_points,
                              double tail_tol) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::Domain, "lattice parameters must be positive");
  }
  return certify(dilate(w, b), a * b, grid_points, tail_tol);
}

WirtingerSides wirtinger_residual(std::span<const double> f) {
  const std::size_t n = f.size();
  if (n < 101) throw Error(ErrorKind::Precondition, "need at least 101 samples");
  if (std::abs(f.front() * f.back()) > 1e-8) {
    throw Error(ErrorKind::Precondition, "boundary condition f(0) f(1) = 0 violated");
  }
  const double h = 1.0 / static_cast<double>(n - 1);
  std::vector<double> df(n);
  df[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  df[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) df[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);

  CompensatedSum lhs;
  CompensatedSum grad;
  for (std::size_t i = 0; i < n; ++i) {
    const double wgt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    lhs.add(wgt * f[i] * f[i]);
    grad.add(wgt * df[i] * df[i]);
  }
  constexpr double pi = std::numbers::pi;
  return {lhs.value() * h, 4.0 / (pi * pi) * grad.value() * h};
}

}  // namespace gabor
