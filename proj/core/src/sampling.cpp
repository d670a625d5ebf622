#include "kato/sampling.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "kato/errors.hpp"
#include "kato/jet.hpp"
#include "kato/optim.hpp"

namespace kato {

void project_p_harmonic(PointJet& jet, double p) {
  const int n = jet.n(), d = jet.d();
  const double g = jet.gradient_norm();
  if (g <= 0.0)
    throw degenerate_gradient_error("project_p_harmonic: |grad u| = 0");
  const double g2 = g * g;

  const int last = n - 1;
  for (int a = 0; a < d; ++a) jet.set_hess(last, last, a, 0.0);

  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      M(a, b) += (p - 2.0) * jet.grad(last, a) * jet.grad(last, b) / g2;

  Eigen::VectorXd rhs(d);
  for (int a = 0; a < d; ++a) {
    double lap = 0.0;
    for (int i = 0; i < n; ++i) lap += jet.hess(i, i, a);
    double mixed = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < d; ++b)
          mixed += jet.grad(i, a) * jet.grad(j, b) * jet.hess(i, j, b);
    rhs(a) = -(lap + (p - 2.0) / g2 * mixed);
  }
  Eigen::VectorXd x = M.ldlt().solve(rhs);
  for (int a = 0; a < d; ++a) jet.set_hess(last, last, a, x(a));
}

PointJet sample_p_harmonic_jet(double p, int n, int d, std::uint64_t seed) {
  if (!(p > 1.0)) throw domain_error("sample_p_harmonic_jet: requires p > 1");
  if (n < 2 || d < 2)
    throw domain_error("sample_p_harmonic_jet: requires n >= 2, d >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  PointJet jet(n, d);
  int draws = 0;
  do {
    if (++draws > 1000)
      throw std::runtime_error("sample_p_harmonic_jet: rejection loop exceeded 1000 draws");
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < d; ++a) jet.set_grad(i, a, gauss(rng));
  } while (jet.gradient_norm() < 0.1);

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int a = 0; a < d; ++a) jet.set_hess(i, j, a, gauss(rng));

  project_p_harmonic(jet, p);
  return jet;
}

double minimize_ratio_on_manifold(const PointJet& start, double p, int max_iter) {
  const int n = start.n(), d = start.d();
  const int last = n - 1;

  // Free coordinates: upper-triangular Hessian slots except (last, last, *).
  std::vector<std::array<int, 3>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == last && j == last) continue;
      for (int a = 0; a < d; ++a) slots.push_back({i, j, a});
    }

  std::vector<double> x0(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k)
    x0[k] = start.hess(slots[k][0], slots[k][1], slots[k][2]);

  PointJet work = start;
  auto objective = [&](const std::vector<double>& x) {
    for (std::size_t k = 0; k < slots.size(); ++k)
      work.set_hess(slots[k][0], slots[k][1], slots[k][2], x[k]);
    project_p_harmonic(work, p);
    try {
      return kato_ratio(work);
    } catch (const degenerate_gradient_error&) {
      return 1e9;  // off the admissible set; steer away
    }
  };

  auto res = nelder_mead(objective, x0, 0.05, max_iter, 1e-14);
  // One restart from the found point tightens the last digits.
  res = nelder_mead(objective, res.x, 0.005, max_iter, 1e-15);
  return res.value;
}

}  // namespace kato
