#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace kato {

enum class Regime { FirstRegime, MiddleRegime, Saturated };

std::string to_string(Regime r);

/// The sharp constant in the vectorial Kato inequality
/// kappa |grad |grad u||^2 <= |hess u|^2 for p-harmonic maps, together with
/// the regime of the piecewise formula and the minimizer a* of the rational
/// objective f on [0,1].
struct KatoConstant {
  double p = 0.0;
  int n = 0;
  double value = 0.0;
  Regime regime = Regime::FirstRegime;
  double a_star = 0.0;
};

/// Regime breakpoints in p for fixed n: the first/middle boundary
/// 1 + (n-1)/(sqrt(2n)-1) and the middle/saturated boundary sqrt(2n).
std::pair<double, double> regime_breakpoints(int n);

/// Closed-form sharp Kato constant. Requires p > 1, n >= 2.
/// At exact regime boundaries the lower branch is evaluated; the formula is
/// C^1 there, so the choice is immaterial.
KatoConstant kappa(double p, int n);

/// Best constant in the scalar (d = 1) case: min{1 + (p-1)^2/(n-1), 2}.
double kappa_scalar(double p, int n);

/// f(a) = (a^2 (p-2)^2 + a (p^2-4) + 2n) / ((n-2) a + n) on [0,1];
/// kappa(p,n) = min f.
double f_objective(double a, double p, int n);

/// f'(a) = (a^2 (n-2)(p-2)^2 + 2 a n (p-2)^2 + n (p^2-2n)) / ((n-2)a + n)^2.
double f_derivative(double a, double p, int n);

/// Independent brute-force minimization of f: uniform grid on [0,1] followed
/// by golden-section refinement of the best bracket. Returns (min value,
/// minimizer). Requires grid_points >= 1000.
std::pair<double, double> kappa_oracle(double p, int n, int grid_points = 2000,
                                       double refine_tol = 1e-12);

}  // namespace kato
