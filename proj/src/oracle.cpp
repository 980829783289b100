#include "gabor/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

namespace {

constexpr int kPeriods = 2;  // periodise over [-2, 2] extra copies

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i) {
    if (n % i == 0) d.push_back(i);
  }
  return d;
}

void normalize(std::vector<Complex>& g) {
  double norm2 = 0.0;
  for (const auto& v : g) norm2 += std::norm(v);
  if (norm2 == 0.0) throw Error(ErrorKind::Precondition, "window samples vanish");
  const double s = 1.0 / std::sqrt(norm2);
  for (auto& v : g) v *= s;
}

}  // namespace

FiniteGaborModel make_model(std::vector<Complex> window, int time_step, int freq_step) {
  const int n = static_cast<int>(window.size());
  if (n < 1 || time_step < 1 || freq_step < 1 || n % time_step != 0 || n % freq_step != 0) {
    throw Error(ErrorKind::Domain, "time and frequency steps must divide N");
  }
  FiniteGaborModel m;
  m.N = n;
  m.time_step = time_step;
  m.freq_step = freq_step;
  m.window = std::move(window);
  normalize(m.window);
  return m;
}

FiniteGaborModel make_model(const Window& w, double a, double b, int N) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorKind::Domain, "a and b must be positive");
  if (N < 2) throw Error(ErrorKind::Domain, "N must be at least 2");
  const double target = a * b * N;

  int best_p = 0;
  int best_q = 0;
  double best_snap = kSnapTolerance;
  double best_balance = 0.0;
  const auto divs = divisors(N);
  for (int p : divs) {
    for (int q : divs) {
      const double snap = std::abs(static_cast<double>(p) * q / target - 1.0);
      if (snap > kSnapTolerance + 1e-12) continue;
      const double h = a / p;
      const double balance = std::abs(std::log(N * h * h));
      const bool better_snap = snap < best_snap - 1e-12;
      const bool same_snap = std::abs(snap - best_snap) <= 1e-12;
      if (best_p == 0 || better_snap || (same_snap && balance < best_balance)) {
        best_p = p;
        best_q = q;
        best_snap = snap;
        best_balance = balance;
      }
    }
  }
  if (best_p == 0) {
    throw Error(ErrorKind::ParameterNotRepresentable,
                "co-volume " + std::to_string(a * b) + " is not representable as pq/" +
                    std::to_string(N) + " within 1%");
  }

  const double h = a / best_p;
  const double period = N * h;
  std::vector<Complex> g(N);
  for (int n = 0; n < N; ++n) {
    const double t = (n < N / 2 ? n : n - N) * h;
    Complex acc{};
    for (int m = -kPeriods; m <= kPeriods; ++m) acc += w.time(t + m * period);
    g[n] = acc;
  }
  FiniteGaborModel model = make_model(std::move(g), best_p, best_q);
  model.sample_step = h;
  model.snapped_a = a;
  model.snapped_b = best_q / period;
  return model;
}

Eigen::MatrixXcd frame_operator(const FiniteGaborModel& m) {
  const int n = m.N;
  const int shifts = n / m.time_step;
  const int mods = n / m.freq_step;
  Eigen::MatrixXcd atoms(n, static_cast<Eigen::Index>(shifts) * mods);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Eigen::Index col = 0;
  for (int k = 0; k < shifts; ++k) {
    for (int l = 0; l < mods; ++l, ++col) {
      for (int j = 0; j < n; ++j) {
        const int src = ((j - k * m.time_step) % n + n) % n;
        // Reduce the phase index mod N to keep the argument small.
        const long long phase = (static_cast<long long>(l) * m.freq_step * j) % n;
        atoms(j, col) = std::polar(1.0, two_pi * static_cast<double>(phase) / n) * m.window[src];
      }
    }
  }
  return atoms * atoms.adjoint();
}

FrameBounds finite_frame_bounds(const FiniteGaborModel& m) {
  const Eigen::MatrixXcd s = frame_operator(m);
  FrameBounds fb;
  fb.asymmetry = (s - s.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd sym = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  fb.A = std::max(0.0, ev.minCoeff());
  fb.B = ev.maxCoeff();
  return fb;
}

EquivalenceReport equivalence_check(const Window& w, double a, double b, int N) {
  EquivalenceReport r;
  r.model_rect = make_model(w, a, b, N);
  r.model_square = make_model(dilate(w, b), a * b, 1.0, N);
  r.bounds_rect = finite_frame_bounds(r.model_rect);
  r.bounds_square = finite_frame_bounds(r.model_square);
  r.rel_gap = std::abs(r.bounds_rect.ratio() - r.bounds_square.ratio());
  return r;
}

}  // namespace gabor
