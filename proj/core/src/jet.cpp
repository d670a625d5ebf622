#include "kato/jet.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "kato/config.hpp"
#include "kato/errors.hpp"

namespace kato {

PointJet::PointJet(int n, int d) : n_(n), d_(d) {
  if (n < 2) throw domain_error("PointJet: requires n >= 2");
  if (d < 1) throw domain_error("PointJet: requires d >= 1");
  grad_.assign(static_cast<std::size_t>(n) * d, 0.0);
  hess_.assign(static_cast<std::size_t>(n) * n * d, 0.0);
}

double PointJet::gradient_norm() const {
  double s = 0.0;
  for (double v : grad_) s += v * v;
  return std::sqrt(s);
}

double PointJet::hessian_norm_sq() const {
  double s = 0.0;
  for (double v : hess_) s += v * v;
  return s;
}

std::vector<double> PointJet::grad_of_gradient_norm() const {
  const double g = gradient_norm();
  if (g <= 0.0)
    throw degenerate_gradient_error("grad_of_gradient_norm: |grad u| = 0");
  std::vector<double> out(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j)
      for (int a = 0; a < d_; ++a) s += grad(j, a) * hess(i, j, a);
    out[i] = s / g;
  }
  return out;
}

PointJet PointJet::scaled(double lambda) const {
  PointJet out(*this);
  for (double& v : out.grad_) v *= lambda;
  for (double& v : out.hess_) v *= lambda;
  return out;
}

PointJet PointJet::embedded_in_target_dim(int d_new) const {
  PointJet out(n_, d_new);
  const int dm = std::min(d_, d_new);
  for (int i = 0; i < n_; ++i)
    for (int a = 0; a < dm; ++a) out.set_grad(i, a, grad(i, a));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      for (int a = 0; a < dm; ++a) out.set_hess(i, j, a, hess(i, j, a));
  return out;
}

double verify_p_harmonic(const PointJet& jet, double p) {
  const double g = jet.gradient_norm();
  if (g <= 0.0)
    throw degenerate_gradient_error("verify_p_harmonic: equation degenerate, |grad u| = 0");
  const double g2 = g * g;
  const int n = jet.n(), d = jet.d();
  double worst = 0.0;
  for (int a = 0; a < d; ++a) {
    double lap = 0.0;
    for (int i = 0; i < n; ++i) lap += jet.hess(i, i, a);
    double mixed = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < d; ++b)
          mixed += jet.grad(i, a) * jet.grad(j, b) * jet.hess(i, j, b);
    worst = std::max(worst, std::abs(lap + (p - 2.0) / g2 * mixed));
  }
  return worst;
}

double kato_ratio(const PointJet& jet) {
  const auto dg = jet.grad_of_gradient_norm();
  double denom = 0.0;
  for (double v : dg) denom += v * v;
  if (std::sqrt(denom) < tol::DEGENERATE_GRAD_NORM)
    throw degenerate_gradient_error("kato_ratio: |grad |grad u|| ~ 0, ratio undefined");
  return jet.hessian_norm_sq() / denom;
}

PointJet normal_form(const PointJet& jet) {
  const int n = jet.n(), d = jet.d();
  // A maps domain to target: A(a,i) = u_i^a.
  Eigen::MatrixXd A(d, n);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < n; ++i) A(a, i) = jet.grad(i, a);

  // Diagonalize the Gram matrix A^T A; eigenvectors give the domain rotation.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.transpose() * A);
  Eigen::VectorXd lambda = es.eigenvalues();
  Eigen::MatrixXd V = es.eigenvectors();
  // Descending singular values so the nonzero alphas land in leading slots.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return lambda(a) > lambda(b); });
  Eigen::MatrixXd Vs(n, n);
  Eigen::VectorXd ls(n);
  for (int i = 0; i < n; ++i) {
    Vs.col(i) = V.col(perm[i]);
    ls(i) = std::max(lambda(perm[i]), 0.0);
  }

  // Orthonormal target basis: columns of A*Vs normalized where nonzero,
  // completed by Gram-Schmidt over the canonical basis.
  const double scale = std::sqrt(std::max(ls(0), 1.0));
  Eigen::MatrixXd Q(d, d);
  int filled = 0;
  for (int i = 0; i < n && filled < d; ++i) {
    const double s = std::sqrt(ls(i));
    if (s > 1e-13 * scale) Q.col(filled++) = (A * Vs.col(i)) / s;
  }
  for (int e = 0; e < d && filled < d; ++e) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(d, e);
    for (int k = 0; k < filled; ++k) v -= Q.col(k).dot(v) * Q.col(k);
    const double nv = v.norm();
    if (nv > 1e-8) Q.col(filled++) = v / nv;
  }

  PointJet out(n, d);
  Eigen::MatrixXd G = Q.transpose() * (A * Vs);  // d x n, diagonal up to noise
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a) out.set_grad(i, a, G(a, i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int a = 0; a < d; ++a) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double hb = 0.0;
            for (int b = 0; b < d; ++b) hb += Q(b, a) * jet.hess(k, l, b);
            s += Vs(k, i) * Vs(l, j) * hb;
          }
        out.set_hess(i, j, a, s);
      }
  return out;
}

}  // namespace kato
