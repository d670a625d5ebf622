#include "kato/gamma.hpp"

#include <cmath>
#include <limits>

#include "kato/errors.hpp"

namespace kato {

namespace {

void check_p(double p) {
  if (!(p >= 2.0) || !(p < 3.0))
    throw domain_error("gamma module: requires 2 <= p < 3");
}

double raw_a(double p, double g) {
  const double e = p + 2.0 * g * (p - 1.0);
  const double s = 1.0 + g;
  return (3.0 - p) * e / (3.0 * s * s) - 0.5;
}

double raw_b(double p, double g) {
  const double e = p + 2.0 * g * (p - 1.0);
  const double s = 1.0 + g;
  return 1.0 - (3.0 - p) * (3.0 - p) * e / (4.0 * s * s);
}

GammaCertificate make_certificate(double p, double g) {
  GammaCertificate cert;
  cert.p = p;
  cert.gamma = g;
  cert.a_coef = raw_a(p, g);
  cert.b_coef = raw_b(p, g);
  const double e = p + 2.0 * g * (p - 1.0);
  cert.c_const = e > 0.0 ? 3.0 / e : std::numeric_limits<double>::infinity();
  cert.admissible = g > gamma_lower_bound(p) && g <= 0.0 &&
                    cert.a_coef >= 0.0 && cert.b_coef > 0.0;
  return cert;
}

}  // namespace

GammaCoefficients coefficients(double p, double gamma) {
  check_p(p);
  if (!(gamma > gamma_lower_bound(p)) || !(gamma <= 0.0))
    throw domain_error("coefficients: requires -p/(2(p-1)) < gamma <= 0");
  GammaCoefficients c;
  c.a = raw_a(p, gamma);
  c.b = raw_b(p, gamma);
  c.c = 3.0 / (p + 2.0 * gamma * (p - 1.0));
  return c;
}

double gamma_lower_bound(double p) { return -p / (2.0 * (p - 1.0)); }

double gamma_vertex(double p) { return (-2.0 * p * p + 8.0 * p - 9.0) / 3.0; }

std::optional<std::pair<double, double>> feasible_gamma_interval(double p) {
  check_p(p);
  // -3 g^2 + b g + c >= 0 with b = 2(-2p^2+8p-9), c = 2p(3-p) - 3.
  const double b = 2.0 * (-2.0 * p * p + 8.0 * p - 9.0);
  const double c = 2.0 * p * (3.0 - p) - 3.0;
  const double disc = b * b + 12.0 * c;
  if (disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  return std::make_pair((b - s) / 6.0, (b + s) / 6.0);
}

double p0_cubic() {
  auto f = [](double p) { return ((2.0 * p - 10.0) * p + 17.0) * p - 12.0; };
  auto df = [](double p) { return (6.0 * p - 20.0) * p + 17.0; };
  double lo = 2.5, hi = 2.7, p = 2.6;
  for (int it = 0; it < 100; ++it) {
    const double fp = f(p);
    if (fp > 0.0) hi = p; else lo = p;
    double next = p - fp / df(p);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == p) break;
    p = next;
  }
  return p;
}

double p0_cardano() {
  const double t = std::cbrt(2.0 * (59.0 + 9.0 * std::sqrt(43.0)));
  return (5.0 + t / 2.0 - 1.0 / t) / 3.0;
}

std::optional<GammaCertificate> find_certificate(double p) {
  check_p(p);
  // Mirrors the two named choices of the argument: gamma = 0, then the vertex
  // value at p0, then a scan of the feasibility interval.
  GammaCertificate cert = make_certificate(p, 0.0);
  if (cert.admissible) return cert;

  static const double gamma_at_p0 = gamma_vertex(p0_cubic());
  cert = make_certificate(p, gamma_at_p0);
  if (cert.admissible) return cert;

  const auto interval = feasible_gamma_interval(p);
  if (!interval) return std::nullopt;
  const double lo = std::max(interval->first, gamma_lower_bound(p));
  const double hi = std::min(interval->second, 0.0);
  if (lo > hi) return std::nullopt;
  const int kScanPoints = 201;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double g = lo + (hi - lo) * i / kScanPoints;
    cert = make_certificate(p, g);
    if (cert.admissible) return cert;
  }
  return std::nullopt;
}

RegionScan region_scan(double p_lo, double p_hi, double gamma_lo,
                       double gamma_hi, int steps) {
  if (!(p_lo >= 2.0 && p_hi <= 3.0 && p_lo < p_hi))
    throw domain_error("region_scan: p range must lie in [2,3]");
  if (!(gamma_lo >= -1.0 && gamma_hi <= 0.0 && gamma_lo < gamma_hi))
    throw domain_error("region_scan: gamma range must lie in [-1,0]");
  if (steps < 2) throw domain_error("region_scan: requires steps >= 2");

  RegionScan scan;
  scan.p_steps = steps;
  scan.gamma_steps = steps;
  scan.cells.reserve(static_cast<std::size_t>(steps + 1) * (steps + 1));

  for (int i = 0; i <= steps; ++i) {
    const double p = p_lo + (p_hi - p_lo) * i / steps;
    for (int j = 0; j <= steps; ++j) {
      const double g = gamma_lo + (gamma_hi - gamma_lo) * j / steps;
      RegionCell cell;
      cell.p = p;
      cell.gamma = g;
      cell.a = raw_a(p, g);
      cell.b = raw_b(p, g);
      cell.gamma_ok = g > gamma_lower_bound(p);
      cell.admissible = cell.gamma_ok && cell.a >= 0.0 && cell.b > 0.0;
      scan.cells.push_back(cell);
    }

    // Boundary curves by sign-change bracketing down each column.
    auto bracket = [&](auto&& fn, std::vector<std::pair<double, double>>& out) {
      const int fine = 400;
      double prev = fn(gamma_lo);
      for (int j = 1; j <= fine; ++j) {
        const double g = gamma_lo + (gamma_hi - gamma_lo) * j / fine;
        const double cur = fn(g);
        if ((prev < 0.0) != (cur < 0.0)) {
          double a = gamma_lo + (gamma_hi - gamma_lo) * (j - 1.0) / fine, b = g;
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (a + b);
            ((fn(mid) < 0.0) == (fn(a) < 0.0) ? a : b) = mid;
          }
          out.emplace_back(p, 0.5 * (a + b));
        }
        prev = cur;
      }
    };
    bracket([&](double g) { return raw_a(p, g); }, scan.a_zero);
    bracket([&](double g) { return raw_b(p, g); }, scan.b_zero);
    bracket([&](double g) { return g - gamma_lower_bound(p); }, scan.gamma_bound);
  }
  return scan;
}

}  // namespace kato
