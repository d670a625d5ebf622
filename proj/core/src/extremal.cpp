#include "kato/extremal.hpp"

#include <cmath>

#include "kato/config.hpp"
#include "kato/errors.hpp"
#include "kato/kato_constant.hpp"

namespace kato {

QuadraticFormZW build_quadratic_form(double p, int n, double alpha,
                                     double kappa_value) {
  if (!(p > 1.0)) throw domain_error("build_quadratic_form: requires p > 1");
  if (n < 2) throw domain_error("build_quadratic_form: requires n >= 2");
  if (alpha * alpha > 1.0 + 1e-15)
    throw domain_error("build_quadratic_form: requires alpha^2 <= 1");
  const double a2 = std::min(alpha * alpha, 1.0);
  const double beta = std::sqrt(1.0 - a2);
  QuadraticFormZW form;
  form.coef_z2 = -kappa_value + 2.0 + a2 * ((p - 1.0) * (p - 1.0) / (n - 1) - 1.0);
  form.coef_w2 = 2.0 - (n - 2) * beta * beta / (n - 1);
  form.coef_zw = -2.0 * alpha * beta * (n - p) / (n - 1);
  form.discriminant =
      form.coef_zw * form.coef_zw - 4.0 * form.coef_z2 * form.coef_w2;
  return form;
}

std::pair<double, double> degenerate_direction(const QuadraticFormZW& form) {
  if (std::abs(form.discriminant) >= tol::DISC_TOL)
    throw no_null_direction_error(
        "degenerate_direction: discriminant is not ~ 0, no real null direction");
  double z = 1.0, w = 0.0;
  if (form.coef_zw != 0.0 || form.coef_z2 != 0.0)
    w = -form.coef_zw / (2.0 * form.coef_w2);
  const double norm = std::sqrt(z * z + w * w);
  return {z / norm, w / norm};
}

PointJet build_extremal_jet(double p, int n) {
  const KatoConstant k = kappa(p, n);
  const double alpha = std::sqrt(k.a_star);
  const double beta = std::sqrt(1.0 - k.a_star);

  const QuadraticFormZW form = build_quadratic_form(p, n, alpha, k.value);
  const auto [z, w] = degenerate_direction(form);
  // Undo the rotation (z,w) -> (x,y).
  const double x = alpha * z + beta * w;
  const double y = beta * z - alpha * w;

  PointJet jet(n, 2);
  jet.set_grad(0, 0, alpha);
  jet.set_grad(1, 1, beta);
  jet.set_hess(0, 0, 0, x);
  jet.set_hess(0, 1, 1, y);
  // sum_b alpha_b u_1b^b = alpha x + beta y = z.
  const double trailing = -(x + (p - 2.0) * alpha * z) / (n - 1);
  for (int j = 1; j < n; ++j) jet.set_hess(j, j, 0, trailing);
  return jet;
}

}  // namespace kato
