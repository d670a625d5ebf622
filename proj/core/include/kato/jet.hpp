#pragma once

#include <vector>

namespace kato {

/// Second-order jet of a map R^n -> R^d at a point, in flat coordinates:
/// first derivatives u_i^a and second derivatives u_ij^a, the latter kept
/// symmetric in (i,j) by construction.
class PointJet {
public:
  PointJet(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }

  double grad(int i, int a) const { return grad_[i * d_ + a]; }
  void set_grad(int i, int a, double v) { grad_[i * d_ + a] = v; }

  double hess(int i, int j, int a) const { return hess_[(i * n_ + j) * d_ + a]; }
  // Writes both (i,j) and (j,i) slots so symmetry is exact.
  void set_hess(int i, int j, int a, double v) {
    hess_[(i * n_ + j) * d_ + a] = v;
    hess_[(j * n_ + i) * d_ + a] = v;
  }

  const std::vector<double>& grad_data() const { return grad_; }
  const std::vector<double>& hess_data() const { return hess_; }

  double gradient_norm() const;       // |grad u|
  double hessian_norm_sq() const;     // |hess u|^2
  // grad_i |grad u| = sum_{j,b} u_j^b u_ij^b / |grad u|; requires |grad u| > 0.
  std::vector<double> grad_of_gradient_norm() const;

  PointJet scaled(double lambda) const;
  // Zero-pads (or truncates, if smaller) the target dimension.
  PointJet embedded_in_target_dim(int d_new) const;

private:
  int n_;
  int d_;
  std::vector<double> grad_;  // n x d, row-major over i then a
  std::vector<double> hess_;  // n x n x d
};

/// Max over target coordinates of the pointwise p-Laplace residual
/// | sum_i u_ii^a + (p-2)/|grad u|^2 sum_{i,j,b} u_i^a u_j^b u_ij^b |.
/// Works for arbitrary (not necessarily diagonal) gradients.
double verify_p_harmonic(const PointJet& jet, double p);

/// |hess u|^2 / |grad |grad u||^2. Throws degenerate_gradient_error when
/// |grad |grad u|| < tol::DEGENERATE_GRAD_NORM.
double kato_ratio(const PointJet& jet);

/// Rotates domain and target so the gradient becomes diagonal with
/// nonnegative entries (singular values of grad, descending); the Hessian is
/// rotated covariantly. kato_ratio is invariant; the p-harmonic residual
/// vector rotates in the target, so its max-norm can change by a factor of at
/// most sqrt(d).
PointJet normal_form(const PointJet& jet);

}  // namespace kato
