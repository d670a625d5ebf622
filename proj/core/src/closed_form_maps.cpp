#include "kato/closed_form_maps.hpp"

#include <cmath>

#include "kato/errors.hpp"

namespace kato {

PointJet radial_power_jet(double p, int n, const std::vector<double>& x) {
  if (!(p > 1.0)) throw domain_error("radial_power_jet: requires p > 1");
  if (n < 2 || static_cast<int>(x.size()) != n)
    throw domain_error("radial_power_jet: requires n >= 2 and x in R^n");
  if (p == static_cast<double>(n))
    throw constant_exponent_error("radial_power_jet: p == n makes the map constant");
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  if (r2 == 0.0) throw domain_error("radial_power_jet: x must be nonzero");
  const double r = std::sqrt(r2);
  const double sigma = (p - n) / (p - 1.0);

  PointJet jet(n, 2);
  const double gs = sigma * std::pow(r, sigma - 2.0);
  const double hs = sigma * std::pow(r, sigma - 4.0);
  for (int i = 0; i < n; ++i) jet.set_grad(i, 0, gs * x[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      jet.set_hess(i, j, 0, hs * ((sigma - 2.0) * x[i] * x[j] + (i == j ? r2 : 0.0)));
  return jet;
}

std::vector<double> equator_projection_value(int n, int d, int R,
                                             const std::vector<double>& x) {
  if (R < 2 || R > std::min(d + 1, n))
    throw domain_error("equator_projection: requires 2 <= R <= min(d+1, n)");
  if (static_cast<int>(x.size()) != n)
    throw domain_error("equator_projection: x must lie in R^n");
  double rho2 = 0.0;
  for (int i = 0; i < R; ++i) rho2 += x[i] * x[i];
  if (rho2 == 0.0)
    throw domain_error("equator_projection: leading R coordinates of x vanish");
  const double rho = std::sqrt(rho2);
  std::vector<double> v(d + 1, 0.0);
  for (int a = 0; a < R; ++a) v[a] = x[a] / rho;
  return v;
}

PointJet equator_projection_jet(int n, int d, int R,
                                const std::vector<double>& x) {
  const auto v = equator_projection_value(n, d, R, x);  // validates inputs
  double rho2 = 0.0;
  for (int i = 0; i < R; ++i) rho2 += x[i] * x[i];
  const double rho = std::sqrt(rho2);
  const double rho3 = rho * rho2, rho5 = rho3 * rho2;

  PointJet jet(n, d + 1);
  for (int a = 0; a < R; ++a)
    for (int i = 0; i < R; ++i)
      jet.set_grad(i, a, (i == a ? 1.0 / rho : 0.0) - x[a] * x[i] / rho3);
  for (int a = 0; a < R; ++a)
    for (int i = 0; i < R; ++i)
      for (int j = i; j < R; ++j) {
        double h = -((i == a ? x[j] : 0.0) + (j == a ? x[i] : 0.0) +
                     (i == j ? x[a] : 0.0)) /
                       rho3 +
                   3.0 * x[a] * x[i] * x[j] / rho5;
        jet.set_hess(i, j, a, h);
      }
  return jet;
}

PointJet tangential_hessian_jet(const PointJet& jet,
                                const std::vector<double>& v) {
  const int n = jet.n(), d = jet.d();
  if (static_cast<int>(v.size()) != d)
    throw domain_error("tangential_hessian_jet: value/target dim mismatch");
  double norm2 = 0.0;
  for (double c : v) norm2 += c * c;
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw domain_error("tangential_hessian_jet: v must be a unit vector");

  PointJet out = jet;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double dot = 0.0;
      for (int a = 0; a < d; ++a) dot += jet.hess(i, j, a) * v[a];
      for (int a = 0; a < d; ++a)
        out.set_hess(i, j, a, jet.hess(i, j, a) - dot * v[a]);
    }
  return out;
}

double tangential_p_harmonic_residual(const PointJet& jet,
                                      const std::vector<double>& v, double p) {
  const int n = jet.n(), d = jet.d();
  if (static_cast<int>(v.size()) != d)
    throw domain_error("tangential_p_harmonic_residual: value/target dim mismatch");
  const double g = jet.gradient_norm();
  if (g <= 0.0)
    throw degenerate_gradient_error("tangential_p_harmonic_residual: |grad u| = 0");
  const double g2 = g * g;

  std::vector<double> res(d, 0.0);
  for (int a = 0; a < d; ++a) {
    double lap = 0.0;
    for (int i = 0; i < n; ++i) lap += jet.hess(i, i, a);
    double mixed = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < d; ++b)
          mixed += jet.grad(i, a) * jet.grad(j, b) * jet.hess(i, j, b);
    res[a] = lap + (p - 2.0) / g2 * mixed;
  }
  double dot = 0.0;
  for (int a = 0; a < d; ++a) dot += res[a] * v[a];
  double worst = 0.0;
  for (int a = 0; a < d; ++a) worst = std::max(worst, std::abs(res[a] - dot * v[a]));
  return worst;
}

PointJet finite_difference_jet(const MapEvaluator& map,
                               const std::vector<double>& x, double h) {
  if (h <= 0.0) throw domain_error("finite_difference_jet: requires h > 0");
  const int n = static_cast<int>(x.size());
  const std::vector<double> f0 = map(x);
  const int d = static_cast<int>(f0.size());

  auto at = [&](int i, double di, int j, double dj) {
    std::vector<double> y = x;
    y[i] += di;
    if (j >= 0) y[j] += dj;
    return map(y);
  };

  PointJet jet(n, d);
  for (int i = 0; i < n; ++i) {
    const auto fp = at(i, h, -1, 0), fm = at(i, -h, -1, 0);
    for (int a = 0; a < d; ++a) {
      jet.set_grad(i, a, (fp[a] - fm[a]) / (2.0 * h));
      jet.set_hess(i, i, a, (fp[a] - 2.0 * f0[a] + fm[a]) / (h * h));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto fpp = at(i, h, j, h), fpm = at(i, h, j, -h);
      const auto fmp = at(i, -h, j, h), fmm = at(i, -h, j, -h);
      for (int a = 0; a < d; ++a)
        jet.set_hess(i, j, a,
                     (fpp[a] - fpm[a] - fmp[a] + fmm[a]) / (4.0 * h * h));
    }
  return jet;
}

}  // namespace kato
