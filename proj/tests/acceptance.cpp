// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every numeric threshold here is part of the project contract.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kato/appendix.hpp"
#include "kato/closed_form_maps.hpp"
#include "kato/extremal.hpp"
#include "kato/gamma.hpp"
#include "kato/jet.hpp"
#include "kato/kato_constant.hpp"
#include "kato/regularity.hpp"
#include "kato/reports.hpp"
#include "kato/sampling.hpp"
#include "kato/serialization.hpp"

using namespace kato;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", idx,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1. Closed form matches the brute-force oracle on a dense grid, quickly.
void criterion_oracle_grid() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (int i = 0; i <= 490; ++i) {
      const double p = 1.1 + 0.01 * i;  // [1.1, 6.0]
      const auto [value, a_min] = kappa_oracle(p, n);
      (void)a_min;
      worst = std::max(worst, std::abs(value - kappa(p, n).value));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(1, "oracle agreement on (p, n) grid", worst < 1e-8 && secs < 30.0,
         "max gap " + fmt(worst) + ", " + fmt(secs) + "s");
}

// 2. Harmonic reference value and the n = 2 collapse to the scalar constant.
void criterion_reference_values() {
  bool pass = kappa(2.0, 3).value == 1.5;
  double worst = 0.0;
  for (int i = 0; i <= 490; ++i) {
    const double p = 1.1 + 0.01 * i;
    worst = std::max(worst, std::abs(kappa(p, 2).value - kappa_scalar(p, 2)));
  }
  pass = pass && worst < 1e-12;
  report(2, "kappa(2,3) = 3/2 and n = 2 collapse", pass, "collapse gap " + fmt(worst));
}

// 3. C^1 matching across both regime boundaries.
void criterion_c1_matching() {
  const double h = 1e-7;
  double worst = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const auto [p1, p2] = regime_breakpoints(n);
    for (double b : {p1, p2}) {
      const double left = (kappa(b, n).value - kappa(b - h, n).value) / h;
      const double right = (kappa(b + h, n).value - kappa(b, n).value) / h;
      worst = std::max(worst, std::abs(left - right));
    }
  }
  report(3, "C1 matching at regime breakpoints", worst < 1e-5,
         "max slope gap " + fmt(worst));
}

// 4. Extremal jets: exactly p-harmonic and achieving kappa.
void criterion_extremal_jets() {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> up(1.1, 6.0);
  std::uniform_int_distribution<int> un(2, 10);
  double worst_res = 0.0, worst_gap = 0.0;
  for (int s = 0; s < 200; ++s) {
    const double p = up(rng);
    const int n = un(rng);
    const PointJet jet = build_extremal_jet(p, n);
    worst_res = std::max(worst_res, verify_p_harmonic(jet, p));
    worst_gap = std::max(worst_gap, std::abs(kato_ratio(jet) - kappa(p, n).value));
  }
  report(4, "200 random extremal jets", worst_res < 1e-12 && worst_gap < 1e-9,
         "residual " + fmt(worst_res) + ", gap " + fmt(worst_gap));
}

// 5. Sharpness from below: sampling plus constrained minimization.
void criterion_sampling_and_minimization() {
  struct Config { double p; int n, d; };
  const Config configs[] = {{2.41, 3, 3}, {2.0, 4, 4}, {3.5, 5, 2}};
  bool pass = true;
  std::string detail;
  for (const auto& cfg : configs) {
    const double k = kappa(cfg.p, cfg.n).value;
    int violations = 0;
    for (int s = 0; s < 100000; ++s) {
      const PointJet jet = sample_p_harmonic_jet(cfg.p, cfg.n, cfg.d, 10000 + s);
      double dg2 = 0.0;
      for (double v : jet.grad_of_gradient_norm()) dg2 += v * v;
      if (std::sqrt(dg2) <= 1e-8) continue;
      if (kato_ratio(jet) < k - 1e-9) ++violations;
    }
    if (violations != 0) pass = false;
    detail += "(" + fmt(cfg.p) + "," + std::to_string(cfg.n) + "," +
              std::to_string(cfg.d) + "): " + std::to_string(violations) + " ";
  }

  // Constrained minimization returns to kappa from a perturbed extremal jet.
  const double p = 2.41;
  PointJet start = build_extremal_jet(p, 3);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 0.02);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int a = 0; a < 2; ++a)
        start.set_hess(i, j, a, start.hess(i, j, a) + gauss(rng));
  project_p_harmonic(start, p);
  const double minimum = minimize_ratio_on_manifold(start, p);
  const double min_gap = std::abs(minimum - kappa(p, 3).value);
  pass = pass && min_gap < 1e-6;
  report(5, "sampling and constrained minimization", pass,
         detail + "min gap " + fmt(min_gap));
}

// 6. Closed-form maps against their exact ratios and finite differences.
void criterion_closed_form_maps() {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> ux(0.3, 1.5);
  std::bernoulli_distribution sign;
  auto point = [&](int n) {
    std::vector<double> x(n);
    for (double& xi : x) xi = (sign(rng) ? 1.0 : -1.0) * ux(rng);
    return x;
  };
  double worst_ratio = 0.0, worst_fd = 0.0;
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + static_cast<int>(s % 4);
    double p = 1.3 + 0.045 * s;
    if (std::abs(p - n) < 0.05) p += 0.1;
    const auto x = point(n);
    const PointJet jet = radial_power_jet(p, n, x);
    const double expected = 1.0 + (p - 1.0) * (p - 1.0) / (n - 1);
    worst_ratio = std::max(worst_ratio, std::abs(kato_ratio(jet) - expected));

    const double sigma = (p - n) / (p - 1.0);
    const MapEvaluator map = [sigma](const std::vector<double>& y) {
      double r2 = 0.0;
      for (double yi : y) r2 += yi * yi;
      return std::vector<double>{std::pow(r2, sigma / 2.0), 0.0};
    };
    const PointJet fd = finite_difference_jet(map, x, 1e-4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        worst_fd = std::max(worst_fd,
                            std::abs(fd.hess(i, j, 0) - jet.hess(i, j, 0)));
  }
  // Equator projections: the covariant (tangential) Hessian gives ratio 2.
  for (int s = 0; s < 100; ++s) {
    const int n = 3 + (s % 3);
    const int d = 2 + (s % 3);
    const int R = 2 + (s % std::min(d, n - 1));
    const auto x = point(n);
    const PointJet jet = equator_projection_jet(n, d, R, x);
    const auto v = equator_projection_value(n, d, R, x);
    const PointJet cov = tangential_hessian_jet(jet, v);
    worst_ratio = std::max(worst_ratio, std::abs(kato_ratio(cov) - 2.0));
  }
  report(6, "closed-form maps and finite differences",
         worst_ratio < 1e-10 && worst_fd < 1e-6,
         "ratio gap " + fmt(worst_ratio) + ", fd gap " + fmt(worst_fd));
}

// 7. Regularity gates: threshold exponent and the gate value at p = 2.
void criterion_regularity() {
  const auto mp = max_p_regular(4, 4);
  const double expected = (5.0 + std::sqrt(13.0)) / 3.0;
  bool pass = mp.has_value() && std::abs(*mp - expected) < 1e-9;

  // Brute-force n0 at (p, d) = (2, 4): largest n >= 3 with both gates.
  std::optional<int> brute;
  for (int n = 3; n <= 64; ++n) {
    const double rhs = (4.0 + 2.0 - 2.0) * (n - 2.0) / ((4.0 - 2.0) * (n - 1.0));
    const bool c1 = kappa(2.0, n - 1).value >= rhs;
    const bool c2 = 4.0 * (n - 2.0) * (n - 2.0) < 4.0 * 2.0 * (n - 1.0);
    if (c1 && c2) brute = n;
  }
  pass = pass && n0(2.0, 4) == brute && brute == 4;
  report(7, "regularity gates", pass,
         mp ? "max_p gap " + fmt(std::abs(*mp - expected)) : "max_p missing");
}

// 8. Critical exponent p0 and companion constants.
void criterion_p0() {
  const double p0 = p0_cubic();
  const bool pass = std::abs(p0 - p0_cardano()) < 1e-12 &&
                    std::abs(p0 - 2.6427) < 5e-5 &&
                    std::abs(gamma_vertex(p0) - (-0.60874)) < 5e-6 &&
                    std::abs(coefficients((3.0 + std::sqrt(3.0)) / 2.0, 0.0).a) <
                        1e-12;
  report(8, "critical exponent p0 and boundaries", pass, "p0 = " + fmt(p0));
}

// 9. Admissible certificates exist up to p0 and not past it.
void criterion_certificates() {
  const double p0 = p0_cubic();
  bool pass = true;
  for (double p = 2.0; p <= p0; p += 1e-3) {
    const auto cert = find_certificate(p);
    if (!cert || !cert->admissible || cert->a_coef < -1e-9 ||
        cert->b_coef < -1e-9 || cert->c_const <= 0.0) {
      pass = false;
      break;
    }
  }
  pass = pass && !find_certificate(p0 + 0.01).has_value();
  report(9, "gamma certificates on [2, p0]", pass);
}

// 10. Mixed inequality and Rayleigh quotient.
void criterion_mixed_and_rayleigh() {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> up(2.0, 3.0);
  std::uniform_real_distribution<double> ut(-1.0, 1.0);
  double worst_disc = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < 10000; ++s) {
    const double p = up(rng);
    std::uniform_real_distribution<double> ug(gamma_lower_bound(p) + 1e-9, 0.0);
    worst_disc = std::max(
        worst_disc, mixed_kcs_discriminant_rescaled(p, ug(rng), ut(rng)));
  }
  const double worst_pointwise = verify_mixed_kcs_pointwise(2.5, -0.6, 100000, 33);

  const double target = 1.0 / 16.0;
  const double e3 = rayleigh_quotient_estimate(3.0, 2.5, 1e-3);
  const double e4 = rayleigh_quotient_estimate(3.0, 2.5, 1e-4);
  const double e5 = rayleigh_quotient_estimate(3.0, 2.5, 1e-5);
  const bool rayleigh_ok = e4 >= target && e4 - target <= 0.01 * target &&
                           e5 >= target && e5 <= e4 && e4 <= e3;
  report(10, "mixed inequality and Rayleigh quotient",
         worst_disc <= 0.0 && worst_pointwise < 1e-10 && rayleigh_ok,
         "disc " + fmt(worst_disc) + ", pointwise " + fmt(worst_pointwise) +
             ", e4 excess " + fmt(e4 - target));
}

// 11. Figure data: curve coincidence, crossing location, region extent.
void criterion_figures() {
  bool pass = true;

  write_fig_kappa_curve("acc_fig1.csv", 3, 1.02, 5.0, 600);
  const CsvTable fig1 = read_csv("acc_fig1.csv");
  const double p1 = regime_breakpoints(3).first;
  bool differ_in_middle = false;
  for (std::size_t r = 0; r < fig1.rows.size(); ++r) {
    const double p = fig1.value(r, "p");
    const double gap =
        std::abs(fig1.value(r, "kappa_vector") - fig1.value(r, "kappa_scalar"));
    if (p <= p1 && gap > 1e-12) pass = false;
    if (p > p1 && p < std::sqrt(6.0) && gap > 1e-6) differ_in_middle = true;
  }
  pass = pass && differ_in_middle;
  std::remove("acc_fig1.csv");

  write_fig_corollary44("acc_fig2.csv", 2.0, 3.2, 600);
  const CsvTable fig2 = read_csv("acc_fig2.csv");
  double crossing = 0.0;
  for (std::size_t r = 0; r + 1 < fig2.rows.size(); ++r) {
    const double lo = fig2.value(r, "kappa_p3") - fig2.value(r, "rhs");
    const double hi = fig2.value(r + 1, "kappa_p3") - fig2.value(r + 1, "rhs");
    if (lo >= 0.0 && hi < 0.0)
      crossing = fig2.value(r, "p") +
                 (fig2.value(r + 1, "p") - fig2.value(r, "p")) * lo / (lo - hi);
  }
  pass = pass && std::abs(crossing - 2.8685) < 2e-3;
  std::remove("acc_fig2.csv");

  const auto files = write_fig_gamma_region("acc_fig3.csv", 200);
  const CsvTable fig3 = read_csv("acc_fig3.csv");
  double rightmost = 0.0;
  for (std::size_t r = 0; r < fig3.rows.size(); ++r)
    if (fig3.value(r, "admissible") == 1.0)
      rightmost = std::max(rightmost, fig3.value(r, "p"));
  pass = pass && std::abs(rightmost - 2.6427) < 2.0 / 200.0;
  for (const auto& f : files) std::remove(f.c_str());

  report(11, "figure data", pass,
         "crossing " + fmt(crossing) + ", rightmost " + fmt(rightmost));
}

}  // namespace

int main() {
  criterion_oracle_grid();
  criterion_reference_values();
  criterion_c1_matching();
  criterion_extremal_jets();
  criterion_sampling_and_minimization();
  criterion_closed_form_maps();
  criterion_regularity();
  criterion_p0();
  criterion_certificates();
  criterion_mixed_and_rayleigh();
  criterion_figures();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
