#include "kato/reports.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kato/appendix.hpp"
#include "kato/extremal.hpp"
#include "kato/gamma.hpp"
#include "kato/jet.hpp"
#include "kato/kato_constant.hpp"
#include "kato/regularity.hpp"
#include "kato/sampling.hpp"
#include "kato/serialization.hpp"

namespace kato {

using nlohmann::json;

json kappa_report(double p, int n, bool with_oracle) {
  const KatoConstant k = kappa(p, n);
  json j = to_json(k);
  if (with_oracle) {
    const auto [value, a_min] = kappa_oracle(p, n, 100000, 1e-12);
    j["oracle_value"] = value;
    j["oracle_a_min"] = a_min;
    j["oracle_discrepancy"] = std::abs(value - k.value);
  }
  return j;
}

json jet_report(double p, int n) {
  const KatoConstant k = kappa(p, n);
  const PointJet jet = build_extremal_jet(p, n);
  json j;
  j["kappa"] = k.value;
  j["jet"] = to_json(jet);
  j["residual"] = verify_p_harmonic(jet, p);
  j["ratio_gap"] = std::abs(kato_ratio(jet) - k.value);
  return j;
}

namespace {

json suite_kato_sampling(int samples, std::uint64_t seed, double kappa_bias,
                         bool& ok) {
  const double p = 2.41;
  const int n = 3, d = 3;
  const double reference = kappa(p, n).value + kappa_bias;
  double min_ratio = std::numeric_limits<double>::infinity();
  int violations = 0, skipped = 0;
  for (int s = 0; s < samples; ++s) {
    const PointJet jet = sample_p_harmonic_jet(p, n, d, seed + s);
    const auto dg = jet.grad_of_gradient_norm();
    double dg2 = 0.0;
    for (double v : dg) dg2 += v * v;
    if (std::sqrt(dg2) <= 1e-8) {
      ++skipped;
      continue;
    }
    const double ratio = kato_ratio(jet);
    min_ratio = std::min(min_ratio, ratio);
    if (ratio < reference - 1e-9) ++violations;
  }
  ok = violations == 0;
  return json{{"suite", "kato_sampling"}, {"p", p},
              {"n", n},                   {"d", d},
              {"samples", samples},       {"skipped", skipped},
              {"min_ratio", min_ratio},   {"kappa", reference},
              {"violations", violations}};
}

json suite_mixed_kcs(int samples, std::uint64_t seed, bool& ok) {
  double max_disc = -std::numeric_limits<double>::infinity();
  const int grid = 21;
  for (int ip = 0; ip <= grid; ++ip) {
    const double p = 2.0 + 0.999 * ip / grid;
    for (int ig = 0; ig <= grid; ++ig) {
      const double lo = -p / (2.0 * (p - 1.0));
      const double g = (lo + 1e-6) * (1.0 - static_cast<double>(ig) / grid);
      for (int it = 0; it <= grid; ++it) {
        const double t1 = -1.0 + 2.0 * it / grid;
        max_disc = std::max(max_disc, mixed_kcs_discriminant_rescaled(p, g, t1));
      }
    }
  }
  const double worst_gap =
      verify_mixed_kcs_pointwise(2.5, -0.6, samples, seed);
  ok = max_disc <= 0.0 && worst_gap < 1e-10;
  return json{{"suite", "mixed_kcs"},
              {"grid_max_rescaled_discriminant", max_disc},
              {"samples", samples},
              {"max_pointwise_violation", worst_gap}};
}

json suite_rayleigh(bool& ok) {
  const double n = 3.0, p = 2.5;
  const double target = (n - p) * (n - p) / 4.0;
  const double e4 = rayleigh_quotient_estimate(n, p, 1e-4);
  const double e3 = rayleigh_quotient_estimate(n, p, 1e-3);
  const double e5 = rayleigh_quotient_estimate(n, p, 1e-5);
  ok = e4 >= target && std::abs(e4 - target) <= 0.01 * target && e3 >= e5 &&
       e5 >= target;
  return json{{"suite", "rayleigh"}, {"target", target},
              {"estimate_1e-3", e3}, {"estimate_1e-4", e4},
              {"estimate_1e-5", e5}};
}

json suite_regions(bool& ok) {
  const RegionScan scan = region_scan(2.0, 3.0, -1.0, 0.0, 400);
  double rightmost = 0.0;
  for (const auto& cell : scan.cells)
    if (cell.admissible) rightmost = std::max(rightmost, cell.p);
  const double p0 = p0_cubic();
  ok = std::abs(rightmost - p0) <= 2.0 / 400.0;
  return json{{"suite", "regions"},
              {"rightmost_admissible_p", rightmost},
              {"p0", p0}};
}

}  // namespace

json run_verify_suite(const std::string& suite, int samples,
                      std::uint64_t seed, double kappa_bias, bool& ok) {
  if (suite == "kato_sampling")
    return suite_kato_sampling(samples, seed, kappa_bias, ok);
  if (suite == "mixed_kcs") return suite_mixed_kcs(samples, seed, ok);
  if (suite == "rayleigh") return suite_rayleigh(ok);
  if (suite == "regions") return suite_regions(ok);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<std::string> write_fig_kappa_curve(const std::string& path, int n,
                                               double p_lo, double p_hi,
                                               int steps) {
  CsvWriter csv(path, {"p", "kappa_vector", "kappa_scalar"});
  for (int i = 0; i <= steps; ++i) {
    const double p = p_lo + (p_hi - p_lo) * i / steps;
    csv.row({p, kappa(p, n).value, kappa_scalar(p, n)});
  }
  return {path};
}

std::vector<std::string> write_fig_corollary44(const std::string& path,
                                               double p_lo, double p_hi,
                                               int steps) {
  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i) grid.push_back(p_lo + (p_hi - p_lo) * i / steps);
  const auto table = kappa_p3_table(grid);
  CsvWriter csv(path, {"p", "kappa_p3", "rhs"});
  for (const auto& row : table) csv.row({row.p, row.kappa_p3, row.rhs});
  return {path};
}

std::vector<std::string> write_fig_gamma_region(const std::string& path,
                                                int steps) {
  const RegionScan scan = region_scan(2.0, 3.0, -1.0, 0.0, steps);
  CsvWriter csv(path, {"p", "gamma", "A", "B", "admissible"});
  for (const auto& cell : scan.cells)
    csv.row_mixed({format_double(cell.p), format_double(cell.gamma),
                   format_double(cell.a), format_double(cell.b),
                   cell.admissible ? "1" : "0"});

  auto stem = [&](const std::string& suffix) {
    const auto dot = path.rfind('.');
    return (dot == std::string::npos ? path : path.substr(0, dot)) + suffix +
           ".csv";
  };
  std::vector<std::string> files{path};
  const std::pair<const std::vector<std::pair<double, double>>*, std::string>
      curves[] = {{&scan.a_zero, "_curve_A0"},
                  {&scan.b_zero, "_curve_B0"},
                  {&scan.gamma_bound, "_curve_gamma_bound"}};
  for (const auto& [points, suffix] : curves) {
    const std::string file = stem(suffix);
    CsvWriter curve_csv(file, {"p", "gamma"});
    for (const auto& [p, g] : *points) curve_csv.row({p, g});
    files.push_back(file);
  }
  return files;
}

}  // namespace kato
