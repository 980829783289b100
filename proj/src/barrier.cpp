#include "gabor/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gabor/error.hpp"
#include "gabor/summation.hpp"

namespace gabor {

namespace {

constexpr double kRoundoff = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// ln(exp(a) - exp(b)) for a > b, -inf otherwise.
double log_diff(double log_a, double log_b) {
  if (log_b == -kInf) return log_a;
  if (!(log_a > log_b)) return -kInf;
  return log_a + std::log1p(-std::exp(log_b - log_a));
}

double log_add(double log_a, double log_b) {
  LogSum s;
  s.add_log(log_a);
  s.add_log(log_b);
  return s.log_value();
}

}  // namespace

BarrierReport delta_at_zero(const Window& w, double tail_tol) {
  const auto est = delta_g(w, 0.0, tail_tol);

  BarrierReport report;
  report.window_id = w.label();
  report.parity = w.parity() == Parity::Unknown ? classify_parity(w) : w.parity();
  report.num0 = est.numerator.value;
  report.den0 = est.denominator.value;
  report.delta0 = est.value;
  report.delta0_low = est.low;
  report.delta0_high = est.high;
  report.ghat0 = std::norm(w.freq(0.0));
  report.rigorous = est.numerator.rigorous && est.denominator.rigorous;

  const int terms = std::max(est.numerator.terms_used, est.denominator.terms_used);
  LogSum gap;
  LogSum den;
  for (int m = 1; m <= terms; ++m) {
    const double k2 = static_cast<double>(m) * m;
    den.add_log(std::log(k2) + 2.0 * w.log_abs_freq(m));
    den.add_log(std::log(k2) + 2.0 * w.log_abs_freq(-m));
  }
  // The truncation only needs to be long enough to reach a nonzero term.
  for (int m = 2; m <= std::max(terms, 2); ++m) {
    const double log_weight = std::log(static_cast<double>(m) * m - 1.0);
    gap.add_log(log_weight + 2.0 * w.log_abs_freq(m));
    gap.add_log(log_weight + 2.0 * w.log_abs_freq(-m));
  }
  double log_den_high = den.log_value();
  if (w.envelope()) {
    log_den_high = log_add(log_den_high, envelope_log_tail_bound(*w.envelope(), 1, terms));
  } else {
    log_den_high = log_add(log_den_high, std::log(est.denominator.tail_bound));
  }
  log_den_high += std::log1p(kRoundoff);

  const double log_gap_low = gap.log_value() + std::log1p(-kRoundoff);
  const double log_ghat0_high =
      report.ghat0 == 0.0 ? -kInf : std::log(report.ghat0) + std::log1p(kRoundoff);
  const double log_strict_gap = log_diff(log_gap_low, log_ghat0_high);

  report.strict = log_strict_gap > -kInf;
  // 1/2 - (1/2) sqrt(1 - x) >= x / 4 with x = (den0 - num0) / den0.
  report.log_gap_to_half =
      report.strict ? log_strict_gap - log_den_high - std::log(4.0) : -kInf;
  if (report.strict) {
    report.delta0_high = std::min(report.delta0_high, 0.5 - std::exp(report.log_gap_to_half));
  }
  return report;
}

std::vector<BarrierScanRow> h1_barrier_scan(double b_min, double b_max, int steps,
                                            double tail_tol) {
  if (!(b_min > 0.0) || !(b_max >= b_min) || steps < 1) {
    throw Error(ErrorKind::Precondition, "need 0 < b_min <= b_max and steps >= 1");
  }
  if (!(tail_tol > 0.0 && tail_tol <= 1e-2)) {
    throw Error(ErrorKind::Precondition, "tail tolerance must lie in (0, 1e-2]");
  }
  constexpr double pi = std::numbers::pi;

  std::vector<BarrierScanRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double b =
        steps == 1 ? b_min : b_min * std::pow(b_max / b_min, static_cast<double>(i) / (steps - 1));
    // |phi_b^(k)|^2 = b^3 k^2 e^{-c k^2}; the factor b^3 cancels in every ratio.
    const double c = 2.0 * pi * b * b;

    // log of f_p(x) = x^{2p+2} e^{-c x^2}, decreasing once x^2 > (p+1)/c.
    auto log_term = [c](int power, double x) {
      return (2.0 * power + 2.0) * std::log(x) - c * x * x;
    };
    // Both-sided tail sum_{|k| > K} f_p(k) <= 2 f_p(K+1) / (1 - rho).
    auto log_tail = [&](int power, int terms) {
      const double x = terms + 1.0;
      if (x * x <= (power + 1.0) / c) return kInf;
      const double log_rho = log_term(power, x + 1.0) - log_term(power, x);
      if (log_rho >= 0.0) return kInf;
      return std::log(2.0) + log_term(power, x) - std::log(-std::expm1(log_rho));
    };

    int terms = 1;
    LogSum num;
    LogSum den;
    LogSum gap;
    auto add_shell = [&](int k) {
      num.add_log(std::log(2.0) + log_term(0, k));
      den.add_log(std::log(2.0) + log_term(1, k));
      if (k >= 2) {
        gap.add_log(std::log(2.0) + std::log(static_cast<double>(k) * k - 1.0) + log_term(0, k));
      }
    };
    add_shell(1);
    add_shell(++terms);
    const double log_tol = std::log(tail_tol);
    while (log_tail(0, terms) > log_tol + num.log_value() ||
           log_tail(1, terms) > log_tol + den.log_value()) {
      if (terms >= kMaxTerms) throw Error(ErrorKind::Precondition, "scan tail did not converge");
      add_shell(++terms);
    }
    const double log_num = num.log_value();
    const double log_den = den.log_value();
    const double log_num_high = log_add(log_num, log_tail(0, terms)) + std::log1p(kRoundoff);
    const double log_den_high = log_add(log_den, log_tail(1, terms)) + std::log1p(kRoundoff);

    BarrierScanRow row;
    row.b = b;
    row.delta0 = 0.5 * std::exp(0.5 * (log_num - log_den));
    row.delta0_low = 0.5 * std::exp(0.5 * (log_num - log_den_high)) * (1.0 - kRoundoff);
    row.delta0_high = 0.5 * std::exp(0.5 * (log_num_high - log_den)) * (1.0 + kRoundoff);
    const double log_gap = gap.log_value() + std::log1p(-kRoundoff);
    row.log_gap_to_half = log_gap - log_den_high - std::log(4.0);
    if (row.log_gap_to_half > -kInf) {
      row.delta0_high = std::min(row.delta0_high, 0.5 - std::exp(row.log_gap_to_half));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<BarrierReport> odd_barrier_suite(const std::vector<Window>& corpus,
                                             double tail_tol) {
  for (const auto& w : corpus) {
    if (classify_parity(w) != Parity::Odd) {
      throw Error(ErrorKind::Precondition, "window '" + w.label() + "' is not odd");
    }
  }
  std::vector<BarrierReport> reports;
  reports.reserve(corpus.size());
  for (const auto& w : corpus) reports.push_back(delta_at_zero(w, tail_tol));
  return reports;
}

}  // namespace gabor
