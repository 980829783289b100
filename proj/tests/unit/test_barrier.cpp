#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "brute_force.hpp"
#include "gabor/barrier.hpp"
#include "gabor/criterion.hpp"
#include "gabor/error.hpp"

using namespace gabor;

namespace {

brute::Real h1_delta0(brute::Real b, int K = 50) {
  auto abs2 = brute::dilated([](brute::Real xi) { return brute::hermite_abs2(1, xi); }, b);
  return brute::delta(abs2, 0.0L, K);
}

std::vector<Window> odd_corpus() {
  return {hermite(1), hermite(3), hermite(5), dilate(hermite(1), 0.7),
          combine({{1.0, hermite(1)}, {0.2, hermite(3)}})};
}

}  // namespace

TEST_CASE("first Hermite function at omega = 0") {
  const auto r = delta_at_zero(dilate(hermite(1), 1.0));
  CHECK(r.parity == Parity::Odd);
  CHECK(r.strict);
  CHECK(r.delta0 < 0.5);
  CHECK(r.delta0_high < 0.5);
  CHECK(r.delta0 == doctest::Approx(static_cast<double>(h1_delta0(1.0L))).epsilon(1e-12));
  CHECK(r.delta0_low <= r.delta0);
  CHECK(r.delta0 <= r.delta0_high);
  CHECK(r.ghat0 < 1e-20);
  CHECK(std::isfinite(r.log_gap_to_half));
}

TEST_CASE("gaussian and higher Hermite functions") {
  const auto g = delta_at_zero(gaussian());
  CHECK(g.delta0 > 0.5);
  CHECK_FALSE(g.strict);
  CHECK(g.delta0 == doctest::Approx(static_cast<double>(brute::delta(
                                        [](brute::Real xi) {
                                          return std::exp(-2.0L * brute::kPi * xi * xi);
                                        },
                                        0.0L)))
                        .epsilon(1e-13));

  const auto h3 = delta_at_zero(hermite(3));
  CHECK(h3.strict);
  CHECK(h3.delta0 < 0.5);
  CHECK(h3.delta0 ==
        doctest::Approx(static_cast<double>(brute::delta(
                            [](brute::Real xi) { return brute::hermite_abs2(3, xi); }, 0.0L)))
            .epsilon(1e-12));
}

TEST_CASE("agrees with the density bound") {
  for (const Window& w : odd_corpus()) {
    CHECK(std::abs(delta_at_zero(w).delta0 - delta_g(w, 0.0).value) <= 1e-14);
  }
  CHECK(std::abs(delta_at_zero(gaussian()).delta0 - delta_g(gaussian(), 0.0).value) <=
        1e-14 * delta_g(gaussian(), 0.0).value);
}

TEST_CASE("scan") {
  const auto one = h1_barrier_scan(1.0, 1.0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].b == 1.0);
  CHECK(one[0].delta0 == doctest::Approx(static_cast<double>(h1_delta0(1.0L))).epsilon(1e-12));

  const auto rows = h1_barrier_scan(0.1, 10.0, 50);
  REQUIRE(rows.size() == 50);
  CHECK(rows.front().b == doctest::Approx(0.1));
  CHECK(rows.back().b == doctest::Approx(10.0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].certified_below_half());
    CHECK(rows[i].delta0_high <= 0.5);
    CHECK(std::isfinite(rows[i].log_gap_to_half));
    if (rows[i].b < 1.5) CHECK(rows[i].delta0_high < 0.5);
    if (i > 0) CHECK(rows[i].b / rows[i - 1].b == doctest::Approx(std::pow(100.0, 1.0 / 49)));
    CHECK(rows[i].delta0 ==
          doctest::Approx(static_cast<double>(h1_delta0(rows[i].b, 200))).epsilon(1e-10));
  }
  CHECK_THROWS_AS(h1_barrier_scan(2.0, 1.0, 5), Error);
  CHECK_THROWS_AS(h1_barrier_scan(0.0, 1.0, 5), Error);
}

TEST_CASE("large dilations approach one half from below") {
  const auto r = h1_barrier_scan(3.0, 3.0, 1)[0];
  // Two-term balance: only k = +-1 and +-2 contribute visibly.
  const brute::Real b = 3.0L;
  const brute::Real c = 2.0L * brute::kPi * b * b;
  const brute::Real num = 2.0L * std::exp(-c) + 8.0L * std::exp(-4.0L * c);
  const brute::Real den = 2.0L * std::exp(-c) + 32.0L * std::exp(-4.0L * c);
  CHECK(r.delta0 == doctest::Approx(static_cast<double>(0.5L * std::sqrt(num / den))).epsilon(1e-14));
  CHECK(0.5 - r.delta0 < 1e-10);
  CHECK(r.delta0 <= 0.5);
  // 1/2 - delta0 is about e^{-170} here, so only the log gap can show it.
  CHECK(r.certified_below_half());
  // Leading order: 1/2 - delta0 ~ (den - num) / (4 den) = 3 e^{-3c}.
  const double leading = std::log(3.0) - 3.0 * static_cast<double>(c);
  CHECK(r.log_gap_to_half <= leading + 1e-9);
  CHECK(r.log_gap_to_half >= leading - 1e-6);
  // The log gap is still meaningful where 1/2 - delta0 underflows.
  const auto far = h1_barrier_scan(10.0, 10.0, 1)[0];
  CHECK(far.log_gap_to_half < -700.0);
  CHECK(std::isfinite(far.log_gap_to_half));
}

TEST_CASE("odd corpus") {
  const auto reports = odd_barrier_suite(odd_corpus());
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) {
    CHECK(r.strict);
    CHECK(r.delta0 < 0.5);
    CHECK(r.delta0_high < 0.5);
    CHECK(r.ghat0 < 1e-20);
    CHECK(r.rigorous);
  }
  CHECK(odd_barrier_suite({}).empty());
  try {
    odd_barrier_suite({hermite(1), gaussian()});
    FAIL("gaussian accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("gaussian") != std::string::npos);
  }
}

TEST_CASE("termwise domination") {
  for (const Window& w : odd_corpus()) {
    for (int k = -12; k <= 12; ++k) {
      if (k == 0) continue;
      const double a = std::norm(w.freq(k));
      if (a == 0.0) continue;
      CHECK(a <= k * k * a);
      if (std::abs(k) == 1) CHECK(a == k * k * a);
      if (std::abs(k) > 1) CHECK(a < k * k * a);
    }
  }
}

TEST_CASE("random dilations of the first Hermite function") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> log_b(std::log(0.1), std::log(10.0));
  for (int i = 0; i < 20; ++i) {
    const double b = std::exp(log_b(rng));
    const auto r = delta_at_zero(dilate(hermite(1), b));
    CHECK(r.strict);
    CHECK(std::isfinite(r.log_gap_to_half));
    CHECK(r.delta0 <= 0.5);
    if (b < 1.5) CHECK(r.delta0 < 0.5);
  }
}
