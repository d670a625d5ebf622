#include <cmath>
#include <doctest.h>

#include "kato/config.hpp"
#include "kato/errors.hpp"
#include "kato/kato_constant.hpp"

using namespace kato;

TEST_CASE("kappa closed form at reference points") {
  const auto k23 = kappa(2.0, 3);
  CHECK(k23.value == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(k23.regime == Regime::FirstRegime);
  CHECK(k23.a_star == 1.0);

  const auto k34 = kappa(3.0, 4);  // 3 >= sqrt(8)
  CHECK(k34.value == 2.0);
  CHECK(k34.regime == Regime::Saturated);
  CHECK(k34.a_star == 0.0);

  const auto kmid = kappa(2.41, 3);
  CHECK(kmid.regime == Regime::MiddleRegime);
  const double s6 = std::sqrt(6.0);
  const double expected =
      2.0 - (2.41 - s6) * (2.41 - s6) /
                ((std::sqrt(3.0) - std::sqrt(2.0)) * (std::sqrt(3.0) - std::sqrt(2.0)));
  CHECK(kmid.value == doctest::Approx(expected).epsilon(1e-15));
  CHECK(kmid.value == doctest::Approx(1.98456).epsilon(1e-5));
}

TEST_CASE("kappa domain errors") {
  CHECK_THROWS_AS(kappa(1.0, 3), domain_error);
  CHECK_THROWS_AS(kappa(0.5, 3), domain_error);
  CHECK_THROWS_AS(kappa(2.0, 1), domain_error);
  CHECK_THROWS_AS(f_objective(-0.1, 2.0, 3), domain_error);
  CHECK_THROWS_AS(f_objective(1.1, 2.0, 3), domain_error);
  CHECK_THROWS_AS(kappa_oracle(2.0, 3, 999), domain_error);
}

TEST_CASE("kappa_scalar") {
  CHECK(kappa_scalar(2.0, 3) == doctest::Approx(1.5));
  CHECK(kappa_scalar(4.0, 3) == 2.0);
  // In dimension 2 the vectorial and scalar constants coincide.
  for (double p = 1.1; p < 6.0; p += 0.1)
    CHECK(kappa(p, 2).value == doctest::Approx(kappa_scalar(p, 2)).epsilon(1e-15));
}

TEST_CASE("objective endpoints") {
  for (int n : {2, 3, 5, 9}) {
    for (double p : {1.5, 2.0, 2.7, 4.0}) {
      CHECK(f_objective(0.0, p, n) == doctest::Approx(2.0).epsilon(1e-15));
      CHECK(f_objective(1.0, p, n) ==
            doctest::Approx(1.0 + (p - 1.0) * (p - 1.0) / (n - 1)).epsilon(1e-14));
    }
  }
  // f at the closed-form interior minimizer equals kappa in the middle regime.
  const auto k = kappa(2.41, 3);
  CHECK(k.a_star == doctest::Approx(0.5249).epsilon(1e-4));
  CHECK(f_objective(k.a_star, 2.41, 3) == doctest::Approx(k.value).epsilon(1e-14));
}

TEST_CASE("derivative sign pattern and finite differences") {
  // f'(0) = (p^2 - 2n)/n vanishes exactly at p = sqrt(2n).
  for (int n : {3, 4, 7}) {
    const double p = std::sqrt(2.0 * n);
    CHECK(f_derivative(0.0, p, n) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(f_derivative(0.0, p + 0.1, n) > 0.0);
    CHECK(f_derivative(0.0, p - 0.1, n) < 0.0);
  }
  // Stationarity of the interior minimizer.
  const auto k = kappa(2.41, 3);
  CHECK(std::abs(f_derivative(k.a_star, 2.41, 3)) < 1e-13);

  // Central-difference check on a fixed grid of interior points.
  const double h = 1e-5;
  for (double a : {0.1, 0.3, 0.55, 0.72, 0.9}) {
    for (int n : {2, 3, 6}) {
      for (double p : {1.3, 2.2, 3.7}) {
        const double fd =
            (f_objective(a + h, p, n) - f_objective(a - h, p, n)) / (2.0 * h);
        CHECK(std::abs(f_derivative(a, p, n) - fd) < tol::DERIV_TOL);
      }
    }
  }
}

TEST_CASE("oracle agreement on the full (p, n) grid") {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (double p = 1.1; p <= 6.0; p += 0.1) {
      const auto k = kappa(p, n);
      const auto [value, a_min] = kappa_oracle(p, n);
      worst = std::max(worst, std::abs(value - k.value));
      CHECK(std::abs(a_min - k.a_star) < 1e-4);
    }
  }
  CHECK(worst < tol::ORACLE_TOL);
}

TEST_CASE("oracle at reference points") {
  const auto [v23, a23] = kappa_oracle(2.0, 3, 100000, 1e-12);
  CHECK(v23 == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(a23 == 1.0);
  const auto [v10, a10] = kappa_oracle(10.0, 3);
  CHECK(v10 == 2.0);
  CHECK(a10 == 0.0);
  const auto [vmid, amid] = kappa_oracle(2.41, 3);
  CHECK(vmid == doctest::Approx(1.98456).epsilon(1e-5));
  CHECK(amid == doctest::Approx(0.524875).epsilon(1e-5));
}

TEST_CASE("monotonicity of kappa") {
  for (double p = 1.1; p <= 6.0; p += 0.1) {
    for (int n = 2; n < 10; ++n)
      CHECK(kappa(p, n + 1).value <= kappa(p, n).value + 1e-14);
  }
  for (int n = 2; n <= 10; ++n) {
    double prev = kappa(1.05, n).value;
    for (double p = 1.1; p <= 6.0; p += 0.05) {
      const double cur = kappa(p, n).value;
      CHECK(cur >= prev - 1e-14);
      prev = cur;
    }
  }
}

TEST_CASE("C1 matching at regime boundaries") {
  const double h = 1e-7;
  for (int n = 3; n <= 10; ++n) {
    const auto [p1, p2] = regime_breakpoints(n);
    for (double b : {p1, p2}) {
      const double left = (kappa(b, n).value - kappa(b - h, n).value) / h;
      const double right = (kappa(b + h, n).value - kappa(b, n).value) / h;
      CHECK(std::abs(left - right) < 1e-5);
    }
  }
}

TEST_CASE("bounds: kappa below both endpoint values") {
  for (int n = 2; n <= 10; ++n) {
    for (double p = 1.1; p <= 6.0; p += 0.07) {
      const double v = kappa(p, n).value;
      CHECK(v <= 2.0 + 1e-15);
      CHECK(v <= 1.0 + (p - 1.0) * (p - 1.0) / (n - 1) + 1e-14);
      CHECK(v >= 1.0);
    }
  }
}
