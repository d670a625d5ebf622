#include "kato/kato_constant.hpp"

#include <cmath>

#include "kato/errors.hpp"
#include "kato/optim.hpp"

namespace kato {

namespace {

void check_domain(double p, int n) {
  if (!(p > 1.0)) throw domain_error("kappa: requires p > 1");
  if (n < 2) throw domain_error("kappa: requires integer n >= 2");
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::FirstRegime: return "FirstRegime";
    case Regime::MiddleRegime: return "MiddleRegime";
    case Regime::Saturated: return "Saturated";
  }
  return "?";
}

std::pair<double, double> regime_breakpoints(int n) {
  const double s2n = std::sqrt(2.0 * n);
  return {1.0 + (n - 1) / (s2n - 1.0), s2n};
}

KatoConstant kappa(double p, int n) {
  check_domain(p, n);
  const auto [p1, p2] = regime_breakpoints(n);
  KatoConstant k;
  k.p = p;
  k.n = n;
  if (p <= p1) {
    k.value = 1.0 + (p - 1.0) * (p - 1.0) / (n - 1);
    k.regime = Regime::FirstRegime;
    k.a_star = 1.0;
  } else if (p >= p2) {
    k.value = 2.0;
    k.regime = Regime::Saturated;
    k.a_star = 0.0;
  } else {
    // Middle regime only exists for n >= 3 and then p > 2, so the closed-form
    // interior stationary point is well defined.
    const double s2n = p2;
    const double denom = std::sqrt(static_cast<double>(n)) - std::sqrt(2.0);
    k.value = 2.0 - (p - s2n) * (p - s2n) / (denom * denom);
    k.regime = Regime::MiddleRegime;
    k.a_star = (-n * (p - 2.0) + s2n * (n - p)) / ((n - 2) * (p - 2.0));
  }
  return k;
}

double kappa_scalar(double p, int n) {
  check_domain(p, n);
  return std::min(1.0 + (p - 1.0) * (p - 1.0) / (n - 1), 2.0);
}

double f_objective(double a, double p, int n) {
  check_domain(p, n);
  if (a < 0.0 || a > 1.0) throw domain_error("f_objective: requires a in [0,1]");
  const double q = (p - 2.0) * (p - 2.0);
  return (a * a * q + a * (p * p - 4.0) + 2.0 * n) / ((n - 2) * a + n);
}

double f_derivative(double a, double p, int n) {
  check_domain(p, n);
  if (a < 0.0 || a > 1.0) throw domain_error("f_derivative: requires a in [0,1]");
  const double q = (p - 2.0) * (p - 2.0);
  const double den = (n - 2) * a + n;
  return (a * a * (n - 2) * q + 2.0 * a * n * q + n * (p * p - 2.0 * n)) /
         (den * den);
}

std::pair<double, double> kappa_oracle(double p, int n, int grid_points,
                                       double refine_tol) {
  check_domain(p, n);
  if (grid_points < 1000)
    throw domain_error("kappa_oracle: requires grid_points >= 1000");
  auto f = [&](double a) { return f_objective(a, p, n); };

  int best = 0;
  double best_val = f(0.0);
  for (int i = 1; i <= grid_points; ++i) {
    const double a = static_cast<double>(i) / grid_points;
    const double v = f(a);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  // f is smooth with a single stationary point in [0,1], so the bracket
  // around the best grid node contains the minimum.
  const double lo = std::max(0.0, (best - 1.0) / grid_points);
  const double hi = std::min(1.0, (best + 1.0) / grid_points);
  auto [a_min, value] = golden_section(f, lo, hi, refine_tol);
  // Keep the exact endpoint when it wins (first and saturated regimes).
  if (f(0.0) <= value) return {f(0.0), 0.0};
  if (f(1.0) <= value) return {f(1.0), 1.0};
  return {value, a_min};
}

}  // namespace kato
