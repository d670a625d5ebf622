// Command-line surface: sharp Kato constants, extremal jets, property
// verification suites, and deterministic CSV figure data.
//
// Exit codes: 0 success, 1 property violation, 2 usage or domain error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kato/config.hpp"
#include "kato/errors.hpp"
#include "kato/reports.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Sharp vectorial Kato constants for p-harmonic maps"};
  app.require_subcommand(1);

  // kappa
  double p = 2.0;
  int n = 3;
  bool with_oracle = false;
  auto* cmd_kappa = app.add_subcommand("kappa", "Sharp constant kappa(p, n)");
  cmd_kappa->add_option("--p", p, "Exponent p > 1")->required();
  cmd_kappa->add_option("--n", n, "Domain dimension n >= 2")->required();
  cmd_kappa->add_flag("--oracle", with_oracle,
                      "Also run the grid/golden-section oracle");

  // jet
  auto* cmd_jet = app.add_subcommand("jet", "Extremal jet achieving kappa(p, n)");
  cmd_jet->add_option("--p", p, "Exponent p > 1")->required();
  cmd_jet->add_option("--n", n, "Domain dimension n >= 2")->required();

  // verify
  std::string suite;
  int samples = 100000;
  std::uint64_t seed = kato::tol::DEFAULT_SEED;
  double kappa_bias = 0.0;
  auto* cmd_verify = app.add_subcommand("verify", "Run a property suite");
  cmd_verify
      ->add_option("--suite", suite,
                   "One of: kato_sampling, mixed_kcs, rayleigh, regions")
      ->required()
      ->check(CLI::IsMember({"kato_sampling", "mixed_kcs", "rayleigh", "regions"}));
  cmd_verify->add_option("--samples", samples, "Sample count");
  cmd_verify->add_option("--seed", seed, "RNG seed");
  cmd_verify->add_option("--kappa-bias", kappa_bias)->group("");  // test hook

  // fig
  std::string name, out;
  int fig_n = 3;
  auto* cmd_fig = app.add_subcommand("fig", "Emit figure data as CSV");
  cmd_fig
      ->add_option("--name", name,
                   "One of: kappa_curve, corollary44, gamma_region")
      ->required()
      ->check(CLI::IsMember({"kappa_curve", "corollary44", "gamma_region"}));
  cmd_fig->add_option("--out", out, "Output CSV path")->required();
  cmd_fig->add_option("--n", fig_n, "Domain dimension for kappa_curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors map to exit code 2
  }

  if (cmd_kappa->parsed()) {
    std::cout << kato::kappa_report(p, n, with_oracle).dump(2) << "\n";
    return 0;
  }
  if (cmd_jet->parsed()) {
    std::cout << kato::jet_report(p, n).dump(2) << "\n";
    return 0;
  }
  if (cmd_verify->parsed()) {
    bool ok = false;
    const auto stats = kato::run_verify_suite(suite, samples, seed, kappa_bias, ok);
    std::cout << stats.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  if (cmd_fig->parsed()) {
    std::vector<std::string> files;
    if (name == "kappa_curve")
      files = kato::write_fig_kappa_curve(out, fig_n);
    else if (name == "corollary44")
      files = kato::write_fig_corollary44(out);
    else
      files = kato::write_fig_gamma_region(out);
    for (const auto& f : files) std::cout << f << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kato::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
