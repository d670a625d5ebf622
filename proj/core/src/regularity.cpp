#include "kato/regularity.hpp"

#include <cmath>
#include <limits>

#include "kato/errors.hpp"
#include "kato/kato_constant.hpp"

namespace kato {

std::string to_string(RegStatus s) {
  switch (s) {
    case RegStatus::Regular: return "Regular";
    case RegStatus::IsolatedSingularities: return "IsolatedSingularities";
    case RegStatus::HausdorffBound: return "HausdorffBound";
  }
  return "?";
}

GateResult gate_conditions(double p, int n, int d) {
  if (n < 3) throw domain_error("gate_conditions: requires n >= 3");
  if (!(p >= 2.0) || !(p < d))
    throw domain_error("gate_conditions: requires 2 <= p < d");
  GateResult g;
  g.e1 = (n - 2) * (d + p - 2.0) / ((n - 1) * (d - p));
  const double np = n - p;
  g.e2 = np == 0.0 ? std::numeric_limits<double>::infinity()
                   : 4.0 * (n - 2) * (d + p - 2.0) / (d * np * np);
  g.cond1 = kappa(p, n - 1).value >= g.e1 - (p - 2.0);
  g.cond2 = d * np * np < 4.0 * (d - p) * (n - 1);
  return g;
}

std::optional<int> n0(double p, int d) {
  if (!(p >= 2.0) || !(p < d)) throw domain_error("n0: requires 2 <= p < d");
  constexpr int kHardCap = 1000000;
  std::optional<int> best;
  int cond2_fail_streak = 0;
  for (int n = 3; n <= kHardCap; ++n) {
    const GateResult g = gate_conditions(p, n, d);
    if (g.both()) best = n;
    // cond2's left side grows quadratically against a linear right side, so
    // two consecutive failures mean it stays false for good.
    cond2_fail_streak = g.cond2 ? 0 : cond2_fail_streak + 1;
    if (cond2_fail_streak >= 2) break;
  }
  return best;
}

std::optional<RegularityVerdict> verdict(double p, int n, int d) {
  if (n < 3) throw domain_error("verdict: requires n >= 3");
  const auto gate_n0 = n0(p, d);
  if (!gate_n0) return std::nullopt;
  RegularityVerdict v;
  v.p = p;
  v.n = n;
  v.d = d;
  v.n0 = *gate_n0;
  if (n <= v.n0) {
    v.status = RegStatus::Regular;
  } else if (n == v.n0 + 1) {
    v.status = RegStatus::IsolatedSingularities;
  } else {
    v.status = RegStatus::HausdorffBound;
    v.hausdorff_dim = n - v.n0 - 1;
  }
  const GateResult g = gate_conditions(p, n, d);
  v.e1 = g.e1;
  v.e2 = g.e2;
  return v;
}

std::optional<double> max_p_regular(int n, int d) {
  if (n < 3) throw domain_error("max_p_regular: requires n >= 3");
  if (d <= 2) throw domain_error("max_p_regular: requires d > 2");
  auto feasible = [&](double p) { return gate_conditions(p, n, d).both(); };
  if (!feasible(2.0)) return std::nullopt;

  // Scan for the first failure, then bisect the boundary.
  const double step = 1e-6;
  const double p_end = d - 1e-12;
  double lo = 2.0, hi = p_end;
  bool found_failure = false;
  for (double p = 2.0 + step; p < p_end; p += step) {
    if (!feasible(p)) {
      hi = p;
      found_failure = true;
      break;
    }
    lo = p;
  }
  if (!found_failure) return p_end;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<KappaP3Row> kappa_p3_table(const std::vector<double>& p_grid) {
  std::vector<KappaP3Row> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) {
    if (!(p > 1.0) || !(p < 4.0))
      throw domain_error("kappa_p3_table: requires p in (1,4)");
    KappaP3Row row;
    row.p = p;
    row.kappa_p3 = kappa(p, 3).value;
    row.rhs = 2.0 * (p + 2.0) / (3.0 * (4.0 - p)) - (p - 2.0);
    out.push_back(row);
  }
  return out;
}

}  // namespace kato
