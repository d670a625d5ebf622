#include "kato/appendix.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "kato/errors.hpp"
#include "kato/jet.hpp"
#include "kato/quadrature.hpp"
#include "kato/sampling.hpp"

namespace kato {

namespace {

void check_mixed_domain(double p, double gamma, double theta1) {
  if (!(p >= 2.0) || !(p < 3.0))
    throw domain_error("mixed_kcs: requires 2 <= p < 3");
  if (!(gamma > -p / (2.0 * (p - 1.0))) || !(gamma <= 0.0))
    throw domain_error("mixed_kcs: requires -p/(2(p-1)) < gamma <= 0");
  if (theta1 < -1.0 || theta1 > 1.0)
    throw domain_error("mixed_kcs: requires theta1 in [-1,1]");
}

}  // namespace

double mixed_kcs_discriminant(double p, double gamma, double theta1) {
  check_mixed_domain(p, gamma, theta1);
  if (p == 2.0) return mixed_kcs_discriminant_rescaled(p, gamma, theta1);
  const double e = -2.0 * gamma * (p - 1.0);
  const double t1sq = theta1 * theta1;
  const double t2sq = 1.0 - t1sq;
  return 36.0 * t1sq * t2sq - 4.0 * (2.0 * p + e) * t1sq * 6.0 / (p - 2.0);
}

double mixed_kcs_discriminant_rescaled(double p, double gamma, double theta1) {
  check_mixed_domain(p, gamma, theta1);
  const double e = -2.0 * gamma * (p - 1.0);
  const double t1sq = theta1 * theta1;
  const double t2sq = 1.0 - t1sq;
  return 3.0 * t1sq * t2sq * (p - 2.0) - 2.0 * (2.0 * p + e) * t1sq;
}

double verify_mixed_kcs_pointwise(double p, double gamma, int samples,
                                  std::uint64_t seed) {
  if (!(p >= 2.0) || !(p < 3.0))
    throw domain_error("verify_mixed_kcs_pointwise: requires 2 <= p < 3");
  if (!(gamma > -p / (2.0 * (p - 1.0))) || !(gamma <= 0.0))
    throw domain_error("verify_mixed_kcs_pointwise: requires admissible gamma");

  const int n = 3, d = 3;
  const double c_const = 3.0 / (p + 2.0 * gamma * (p - 1.0));
  const double b_coef = (p - 2.0) + 2.0 * gamma * (p - 1.0);

  double worst = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const PointJet jet = sample_p_harmonic_jet(p, n, d, seed + s);
    const auto dg = jet.grad_of_gradient_norm();
    double dg2 = 0.0;
    for (double v : dg) dg2 += v * v;
    if (std::sqrt(dg2) < 1e-14) continue;

    // |< grad u / |grad u|, grad |grad u| >|^2: squared norm of the target
    // vector sum_i u_i^a dg_i / |grad u|.
    const double g = jet.gradient_norm();
    double inner2 = 0.0;
    for (int a = 0; a < jet.d(); ++a) {
      double s_a = 0.0;
      for (int i = 0; i < jet.n(); ++i) s_a += jet.grad(i, a) * dg[i];
      inner2 += s_a * s_a;
    }
    inner2 /= g * g;

    const double lhs = 3.0 * dg2 + (p - 2.0) * inner2;
    const double rhs = c_const * (jet.hessian_norm_sq() + b_coef * dg2);
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

double rayleigh_quotient(const std::function<double(double)>& f,
                         const std::function<double(double)>& df, double r_lo,
                         double r_hi, double n, double p) {
  if (!(n > p)) throw domain_error("rayleigh_quotient: requires n > p");
  const double a = n - p;
  const double num = adaptive_simpson(
      [&](double r) { return df(r) * df(r) * std::pow(r, a + 1.0); }, r_lo,
      r_hi, 1e-12);
  const double den = adaptive_simpson(
      [&](double r) { return f(r) * f(r) * std::pow(r, a - 1.0); }, r_lo, r_hi,
      1e-12);
  if (!(den > 0.0))
    throw std::runtime_error("rayleigh_quotient: vanishing denominator");
  return num / den;
}

double rayleigh_quotient_estimate(double n, double p, double epsilon) {
  if (!(n > p)) throw domain_error("rayleigh_quotient_estimate: requires n > p");
  if (!(epsilon > 0.0) || !(epsilon < 0.1))
    throw domain_error("rayleigh_quotient_estimate: requires 0 < epsilon < 0.1");

  // Work in t = log r, where the quotient becomes
  //   nu^2 + int chi'(t)^2 dt / int chi(t)^2 dt,   nu = (n-p)/2,
  // for f(r) = r^{-nu} chi(log r). The cutoff is 1 on [eps, 1/eps] with
  // log-linear ramps of width L = log(1/eps)^2 on each side; the ramp cost
  // 2/L over mass ~2 log(1/eps) shrinks fast enough to track the infimum
  // closely already at moderate eps.
  const double nu = 0.5 * (n - p);
  const double t1 = std::log(epsilon), t2 = -std::log(epsilon);
  const double ramp = std::log(1.0 / epsilon) * std::log(1.0 / epsilon);
  const double t0 = t1 - ramp, t3 = t2 + ramp;

  // f(r) = e^{-nu t} chi(t), f'(r) = e^{-nu t} (chi' - nu chi) / r. The
  // integrands below are the original r-space ones after substitution. The
  // quadrature runs piecewise with the smooth formula of each piece, so the
  // kinks at the cutoff knots never enter an integration interval.
  struct Piece {
    double lo, hi;
    std::function<double(double)> chi, dchi;
  };
  const Piece pieces[] = {
      {t0, t1, [=](double t) { return (t - t0) / ramp; },
       [=](double) { return 1.0 / ramp; }},
      {t1, t2, [](double) { return 1.0; }, [](double) { return 0.0; }},
      {t2, t3, [=](double t) { return (t3 - t) / ramp; },
       [=](double) { return -1.0 / ramp; }},
  };
  double num = 0.0, den = 0.0;
  for (const auto& piece : pieces) {
    num += adaptive_simpson(
        [&](double t) {
          const double v = piece.dchi(t) - nu * piece.chi(t);
          return v * v;
        },
        piece.lo, piece.hi, 1e-10);
    den += adaptive_simpson(
        [&](double t) {
          const double c = piece.chi(t);
          return c * c;
        },
        piece.lo, piece.hi, 1e-10);
  }
  return num / den;
}

}  // namespace kato
