#pragma once

#include <utility>

#include "kato/jet.hpp"

namespace kato {

/// Quadratic form in the rotated variables (z, w) whose nonnegativity is
/// equivalent to the Kato inequality at fixed alpha, together with its
/// discriminant.
struct QuadraticFormZW {
  double coef_z2 = 0.0;
  double coef_w2 = 0.0;
  double coef_zw = 0.0;
  double discriminant = 0.0;

  double operator()(double z, double w) const {
    return coef_z2 * z * z + coef_w2 * w * w + coef_zw * z * w;
  }
};

/// Coefficients for given (p, n, alpha, kappa), with beta = sqrt(1 - alpha^2):
///   coef_z2 = -kappa + 2 + alpha^2 ((p-1)^2/(n-1) - 1)
///   coef_w2 = 2 - (n-2) beta^2 / (n-1)
///   coef_zw = -2 alpha beta (n-p) / (n-1)
QuadraticFormZW build_quadratic_form(double p, int n, double alpha,
                                     double kappa_value);

/// A unit-norm null direction of a degenerate form (|discriminant| must be
/// below tol::DISC_TOL; throws no_null_direction_error otherwise).
std::pair<double, double> degenerate_direction(const QuadraticFormZW& form);

/// The d = 2 jet achieving equality in the Kato inequality at a point:
/// diagonal gradient (alpha, beta) from the minimizer of f, Hessian built
/// from the null direction of the degenerate (z,w)-form, trailing diagonal
/// entries chosen so the p-harmonic equation holds exactly.
PointJet build_extremal_jet(double p, int n);

}  // namespace kato
