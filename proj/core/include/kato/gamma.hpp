#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace kato {

/// Admissibility certificate for the test-exponent argument on B^3 -> S^3:
/// the bracketed coefficients A, B and the constant C = 3/(p + 2 gamma (p-1)).
struct GammaCertificate {
  double p = 0.0;
  double gamma = 0.0;
  double a_coef = 0.0;
  double b_coef = 0.0;
  double c_const = 0.0;
  bool admissible = false;
};

struct GammaCoefficients {
  double a = 0.0;  // (3-p)(p + 2 gamma (p-1)) / (3 (1+gamma)^2) - 1/2
  double b = 0.0;  // 1 - (3-p)^2 (p + 2 gamma (p-1)) / (4 (1+gamma)^2)
  double c = 0.0;  // 3 / (p + 2 gamma (p-1))
};

/// Requires 2 <= p < 3 and -p/(2(p-1)) < gamma <= 0.
GammaCoefficients coefficients(double p, double gamma);

/// Lower admissibility bound on gamma: C > 0 exactly above it.
double gamma_lower_bound(double p);

/// Vertex of the feasibility quadratic in gamma: (-2p^2 + 8p - 9)/3.
double gamma_vertex(double p);

/// Root interval of the quadratic 2(3-p)(p + 2 gamma (p-1)) >= 3(1+gamma)^2 in
/// gamma, or nullopt when its discriminant is negative.
std::optional<std::pair<double, double>> feasible_gamma_interval(double p);

/// The unique real root of 2p^3 - 10p^2 + 17p - 12 (Newton with a bisection
/// safeguard on [2.5, 2.7]).
double p0_cubic();

/// The same root in closed Cardano form.
double p0_cardano();

/// First admissible certificate for p, trying gamma = 0, then the vertex value
/// at p0, then a scan of the feasible interval; nullopt if none exists.
std::optional<GammaCertificate> find_certificate(double p);

struct RegionCell {
  double p = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;
  bool gamma_ok = false;  // gamma > -p/(2(p-1))
  bool admissible = false;
};

struct RegionScan {
  int p_steps = 0;
  int gamma_steps = 0;
  std::vector<RegionCell> cells;  // row-major over p then gamma
  // Boundary polylines, one (p, gamma) point per p column where the curve
  // crosses the window; A = 0 can cross twice per column.
  std::vector<std::pair<double, double>> a_zero;
  std::vector<std::pair<double, double>> b_zero;
  std::vector<std::pair<double, double>> gamma_bound;
};

/// Labels a (p, gamma) grid with the admissibility flags and brackets the
/// three boundary curves per p column. Ranges must lie in [2,3] x [-1,0].
RegionScan region_scan(double p_lo, double p_hi, double gamma_lo,
                       double gamma_hi, int steps);

}  // namespace kato
