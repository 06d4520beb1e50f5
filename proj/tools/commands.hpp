#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lurkit::cli {

// Exit codes: 0 success, 1 verification failure, 2 argument/IO error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// 17 significant digits, scientific notation, locale-independent.
std::string format_sig17(double value);

struct VerifyOptions {
  std::uint64_t seed = 42;
  // When >= 0, overrides every per-check tolerance; otherwise each check
  // uses its own default.
  double tol = -1.0;
  // Test harness knob: index of a canonical generator to corrupt, so the
  // algebra checks must fail. Negative = off. Not exposed on the CLI.
  int corrupt_generator = -1;
};

/// Runs the full invariant suite (generator algebra, purity identity,
/// uncertainty-sum bounds, correlation identity, closed-form agreement,
/// separability guard, PPT grid, noise-threshold flip). One line per check.
int cmd_verify(const VerifyOptions& options, std::ostream& out);

struct SweepOptions {
  double a_min = 0.0;
  double a_max = 1.0;
  int steps = 1001;
  double p_noise = 0.0;
  std::string out_path;  // empty = stdout
};

struct SweepRow {
  double a = 0.0;
  double c_lur = 0.0;
  double c_lur_closed = 0.0;
  double k_total_pairing = 0.0;
  double k_total_svd = 0.0;
  double lur_sum = 0.0;
  double mismatch7 = 0.0;
  double mismatch8 = 0.0;
  double min_pt_eigenvalue = 0.0;
  double noise_threshold = 0.0;
};

SweepRow compute_sweep_row(double a, double p_noise);
std::vector<SweepRow> compute_sweep(const SweepOptions& options);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Writes the sweep CSV (header + one row per grid point, ascending a).
int cmd_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err);

struct OptimizeOptions {
  double tol = 1e-8;
};

/// Locates the violation maximum over a in [0, 1] by golden-section search
/// and prints the optimum with its noise threshold.
int cmd_optimize(const OptimizeOptions& options, std::ostream& out,
                 std::ostream& err);

struct StateOptions {
  double a = 0.0;
  double p_noise = 0.0;
  std::string format = "csv";  // csv | json
  std::string out_path;        // empty = stdout
};

/// Exports the 9x9 density matrix with its index-convention preamble.
int cmd_state(const StateOptions& options, std::ostream& out,
              std::ostream& err);

struct NoiseOptions {
  double a = 0.0;
};

/// Prints the violation, its noise threshold, and a two-point check that
/// the violation flips sign exactly at the threshold.
int cmd_noise(const NoiseOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace lurkit::cli
