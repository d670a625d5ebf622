#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kato/config.hpp"

namespace kato {

/// Configuration shared by the verification suites and figure emitters.
/// Reproducible by default: the seed is a fixed documented constant.
struct RunConfig {
  std::uint64_t seed = tol::DEFAULT_SEED;
  double oracle_tol = tol::ORACLE_TOL;
  double jet_tol = tol::JET_TOL;
  double gate_tol = 1e-9;
};

nlohmann::json kappa_report(double p, int n, bool with_oracle);

/// Extremal jet as JSON together with its p-harmonic residual and the gap
/// |kato_ratio - kappa|.
nlohmann::json jet_report(double p, int n);

/// Runs one of the named property suites and returns pass/fail plus summary
/// statistics as JSON (printed by the CLI). kappa_bias shifts the reference
/// constant and exists so the harness sensitivity can be tested.
nlohmann::json run_verify_suite(const std::string& suite, int samples,
                                std::uint64_t seed, double kappa_bias,
                                bool& ok);

/// Figure data emitters; each writes CSV with a header row and
/// round-trip-exact doubles and returns the list of files written.
std::vector<std::string> write_fig_kappa_curve(const std::string& path, int n,
                                               double p_lo = 1.02,
                                               double p_hi = 5.0,
                                               int steps = 600);
std::vector<std::string> write_fig_corollary44(const std::string& path,
                                               double p_lo = 2.0,
                                               double p_hi = 3.2,
                                               int steps = 600);
std::vector<std::string> write_fig_gamma_region(const std::string& path,
                                                int steps = 200);

}  // namespace kato
