#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace lurkit::cli;

  CLI::App app{
      "Toolkit for the one-parameter 3x3 bound entangled family: builds the "
      "states, checks the positive partial transpose, and quantifies the "
      "violation of the non-symmetric local uncertainty relation."};
  app.require_subcommand(1);

  VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full invariant suite and report pass/fail");
  verify->add_option("--seed", verify_options.seed,
                     "Seed for the randomized checks");
  verify->add_option("--tol", verify_options.tol,
                     "Override every per-check tolerance");

  SweepOptions sweep_options;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate all diagnostics over a grid of a values (CSV)");
  sweep->add_option("--a-min", sweep_options.a_min, "Grid start (default 0)");
  sweep->add_option("--a-max", sweep_options.a_max, "Grid end (default 1)");
  sweep->add_option("--steps", sweep_options.steps,
                    "Number of grid points (default 1001)");
  sweep->add_option("--p-noise", sweep_options.p_noise,
                    "White-noise weight mixed into every state");
  sweep->add_option("--out", sweep_options.out_path,
                    "Output file (default stdout)");

  OptimizeOptions optimize_options;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Locate the maximum of the relative violation");
  optimize->add_option("--tol", optimize_options.tol,
                       "Golden-section bracket tolerance (default 1e-8)");

  StateOptions state_options;
  CLI::App* state = app.add_subcommand(
      "state", "Export the 9x9 density matrix for one parameter point");
  state->add_option("--a", state_options.a, "Family parameter in [0, 1]")
      ->required();
  state->add_option("--p-noise", state_options.p_noise,
                    "White-noise weight (default 0)");
  state->add_option("--format", state_options.format, "csv or json");
  state->add_option("--out", state_options.out_path,
                    "Output file (default stdout)");

  NoiseOptions noise_options;
  CLI::App* noise = app.add_subcommand(
      "noise", "Report the noise threshold and confirm the violation flip");
  noise->add_option("--a", noise_options.a, "Family parameter in [0, 1]")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_options, std::cout);
    if (sweep->parsed())
      return cmd_sweep(sweep_options, std::cout, std::cerr);
    if (optimize->parsed())
      return cmd_optimize(optimize_options, std::cout, std::cerr);
    if (state->parsed())
      return cmd_state(state_options, std::cout, std::cerr);
    if (noise->parsed())
      return cmd_noise(noise_options, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
