#include <doctest.h>

#include <cmath>
#include <numbers>

#include "brute_force.hpp"
#include "gabor/error.hpp"
#include "gabor/window.hpp"

using namespace gabor;
using std::numbers::pi;

namespace {

const Complex kI{0.0, 1.0};

std::vector<Window> closed_form_windows() {
  return {gaussian(), hermite(1), hermite(2), hermite(3), hermite(5), dilate(hermite(1), 0.7),
          dilate(gaussian(), 2.0), combine({{1.0, hermite(1)}, {0.2, hermite(3)}})};
}

SampledFunction samples_of(const std::function<double(double)>& f, double half, double step) {
  SampledFunction s;
  s.grid = UniformGrid::symmetric(half, step);
  for (std::size_t i = 0; i < s.grid.size; ++i) s.values.emplace_back(f(s.grid.at(i)), 0.0);
  return s;
}

}  // namespace

TEST_CASE("gaussian values") {
  const Window g = gaussian();
  CHECK(g.time(0.0).real() == 1.0);
  for (double x : {0.3, 1.7}) CHECK(std::abs(g.freq(x) - g.time(x)) < 1e-15);
  CHECK(g.time(1.0).real() == doctest::Approx(0.0432139182637723).epsilon(1e-13));
  CHECK(g.parity() == Parity::Even);
  CHECK(g.known_minimizer().value() == 0.5);
}

TEST_CASE("hermite values") {
  CHECK(std::abs(hermite(1).time(0.0)) == 0.0);
  for (double x : {0.5, 2.0}) {
    CHECK(std::abs(hermite(1).freq(x) + kI * hermite(1).time(x)) < 1e-15);
  }
  CHECK(hermite(3).parity() == Parity::Odd);
  CHECK(hermite(4).parity() == Parity::Even);
  CHECK_THROWS_AS(hermite(-1), Error);
}

TEST_CASE("hermite matches physicists' polynomials") {
  for (int n = 0; n <= 6; ++n) {
    for (double t : {-1.3, -0.2, 0.0, 0.45, 1.1}) {
      CHECK(hermite(n).time(t).real() ==
            doctest::Approx(static_cast<double>(brute::hermite_time(n, t))).epsilon(1e-12));
    }
  }
  const auto p3 = hermite_polynomial(3);
  REQUIRE(p3.size() == 4);
  CHECK(p3[3] == 1.0);
  CHECK(p3[1] == doctest::Approx(-3.0 / (4.0 * pi)));
}

TEST_CASE("dilation") {
  const Window g = gaussian();
  const Window d1 = dilate(g, 1.0);
  for (double t = -3.0; t <= 3.0; t += 0.25) CHECK(std::abs(d1.time(t) - g.time(t)) < 1e-15);
  CHECK(dilate(g, 2.0).time(0.0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  // Functional equation of the dilated first Hermite function.
  const double b = 2.0;
  const double xi = 0.7;
  CHECK(std::abs(dilate(hermite(1), b).freq(xi) + kI * dilate(hermite(1), 1.0 / b).time(xi)) <
        1e-15);

  CHECK_THROWS_AS(dilate(g, 0.0), Error);
  CHECK_THROWS_AS(dilate(g, -1.0), Error);
  try {
    dilate(g, -1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("dilation round trip and parity") {
  for (const Window& w : closed_form_windows()) {
    for (double b : {0.3, 1.7, 4.0}) {
      const Window back = dilate(dilate(w, b), 1.0 / b);
      for (double t = -4.0; t <= 4.0; t += 0.1) {
        CHECK(std::abs(back.time(t) - w.time(t)) < 1e-12);
      }
      CHECK(classify_parity(dilate(w, b)) == classify_parity(w));
    }
  }
}

TEST_CASE("parity classification") {
  CHECK(classify_parity(hermite(1)) == Parity::Odd);
  CHECK(classify_parity(gaussian()) == Parity::Even);
  const auto lopsided = samples_of(
      [](double t) { return t * std::exp(-t * t) + 0.3 * std::exp(-t * t); }, 8.0, 0.01);
  CHECK(classify_parity(sampled(lopsided)) == Parity::Neither);
  CHECK(sampled(lopsided).parity() == Parity::Neither);
  const auto odd = samples_of([](double t) { return t * std::exp(-pi * t * t); }, 8.0, 0.01);
  CHECK(sampled(odd).parity() == Parity::Odd);
}

TEST_CASE("declared parity holds on probes") {
  for (const Window& w : closed_form_windows()) {
    if (w.parity() == Parity::Neither || w.parity() == Parity::Unknown) continue;
    const double s = w.parity() == Parity::Odd ? 1.0 : -1.0;
    for (double t = -5.0; t <= 5.0; t += 0.05) {
      const double scale = std::max(1.0, std::abs(w.time(t)));
      CHECK(std::abs(w.time(t) + s * w.time(-t)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("odd windows vanish at frequency zero") {
  for (const Window& w : closed_form_windows()) {
    if (w.parity() == Parity::Odd) CHECK(std::abs(w.freq(0.0)) < 1e-12);
  }
}

TEST_CASE("closed-form transforms agree with quadrature") {
  for (const Window& w : closed_form_windows()) {
    for (double xi : {0.0, 0.5, 1.0, 2.0}) {
      const auto q = brute::fourier_quadrature([&](double t) { return w.time(t); }, xi);
      CHECK(std::abs(q - w.freq(xi)) < 1e-8);
    }
  }
}

TEST_CASE("envelopes hold on probes") {
  for (const Window& w : closed_form_windows()) {
    REQUIRE(w.envelope().has_value());
    CHECK(verify_envelope(w, 200));
    const auto& env = *w.envelope();
    for (double xi = std::max(1.0, env.threshold); xi <= 10.0; xi += 0.05) {
      CHECK(std::abs(w.freq(xi)) <= env.bound(xi));
      CHECK(std::abs(w.freq(-xi)) <= env.bound(xi));
    }
  }
}

TEST_CASE("log magnitude survives underflow") {
  const Window w = dilate(hermite(1), 20.0);
  // |phi_b^(1)| = b^{3/2} e^{-pi b^2}, far below the smallest double.
  const double expected = 1.5 * std::log(20.0) - pi * 400.0;
  CHECK(w.log_abs_freq(1.0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(w.freq(1.0)) == 0.0);
}

TEST_CASE("sampled windows") {
  const auto s = samples_of([](double t) { return std::exp(-pi * t * t); }, 8.0, 0.01);
  const Window w = sampled(s, "g");
  CHECK_FALSE(w.rigorous());
  CHECK(w.kind() == WindowKind::Sampled);
  CHECK(std::abs(w.time(9.0)) == 0.0);
  CHECK(std::abs(w.freq(0.5) - gaussian().freq(0.5)) < 1e-8);

  auto coarse = samples_of([](double t) { return std::exp(-pi * t * t); }, 8.0, 0.05);
  CHECK_THROWS_AS(sampled(coarse), Error);
  SampledFunction lopsided = s;
  lopsided.grid.start += 0.5;
  CHECK_THROWS_AS(sampled(lopsided), Error);
}

TEST_CASE("combinations") {
  const Window c = combine({{1.0, hermite(1)}, {0.2, hermite(3)}});
  CHECK(c.parity() == Parity::Odd);
  CHECK(c.kind() == WindowKind::Combination);
  const double t = 0.37;
  CHECK(std::abs(c.time(t) - (hermite(1).time(t) + 0.2 * hermite(3).time(t))) < 1e-15);
  const Window mixed = combine({{1.0, hermite(1)}, {1.0, gaussian()}});
  CHECK(mixed.parity() == Parity::Neither);
}
