#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kato {

enum class RegStatus { Regular, IsolatedSingularities, HausdorffBound };

std::string to_string(RegStatus s);

struct GateResult {
  bool cond1 = false;  // kappa(p, n-1) >= (d+p-2)(n-2)/((d-p)(n-1)) - (p-2)
  bool cond2 = false;  // d (n-p)^2 < 4 (d-p)(n-1)
  double e1 = 0.0;     // (n-2)(d+p-2) / ((n-1)(d-p))
  double e2 = 0.0;     // 4 (n-2)(d+p-2) / (d (n-p)^2)
  bool both() const { return cond1 && cond2; }
};

/// Classification of minimizing p-harmonic maps B^n -> S^d by the gate value
/// n0(p, d).
struct RegularityVerdict {
  double p = 0.0;
  int n = 0;
  int d = 0;
  int n0 = 0;
  RegStatus status = RegStatus::Regular;
  int hausdorff_dim = 0;  // n - n0 - 1 when status == HausdorffBound
  double e1 = 0.0;
  double e2 = 0.0;
};

/// Evaluates both gate inequalities at (p, n, d). Requires integer n >= 3 and
/// 2 <= p < d.
GateResult gate_conditions(double p, int n, int d);

/// Largest integer n >= 3 for which both gates hold; nullopt when n = 3
/// already fails.
std::optional<int> n0(double p, int d);

std::optional<RegularityVerdict> verdict(double p, int n, int d);

/// sup{ p : both gates hold at (p', n, d) for every p' in [2, p] }, located by
/// a fine scan plus bisection; nullopt when the gates fail already at p = 2.
std::optional<double> max_p_regular(int n, int d);

struct KappaP3Row {
  double p = 0.0;
  double kappa_p3 = 0.0;
  double rhs = 0.0;  // 2(p+2)/(3(4-p)) - (p-2)
};

/// Both curves of the n = d = 4 comparison: kappa(p,3) against the gate
/// right-hand side, over the given p grid (each p in (1,4)).
std::vector<KappaP3Row> kappa_p3_table(const std::vector<double>& p_grid);

}  // namespace kato
