#include "commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>

#include <json.hpp>

#include "lurkit/lur.hpp"
#include "lurkit/numerics.hpp"
#include "lurkit/qutrit_ops.hpp"
#include "lurkit/states.hpp"
#include "lurkit/witnesses.hpp"

namespace lurkit::cli {

namespace {

using json = nlohmann::json;

ComplexMatrix random_density(std::mt19937_64& gen, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(gen), gauss(gen));
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

ComplexMatrix random_pure_density(std::mt19937_64& gen, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(gen), gauss(gen));
  v.normalize();
  return v * v.adjoint();
}

Eigen::Matrix<double, 8, 8> random_orthogonal8(std::mt19937_64& gen) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix<double, 8, 8> g;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g(i, j) = gauss(gen);
  Eigen::HouseholderQR<Eigen::Matrix<double, 8, 8>> qr(g);
  return qr.householderQ();
}

double basis_algebra_residual(const GeneratorBasis& basis) {
  double worst = 0.0;
  ComplexMatrix sum_sq = ComplexMatrix::Zero(3, 3);
  for (int i = 0; i < 8; ++i) {
    worst = std::max(worst, std::abs(basis.lambdas[i].trace()));
    sum_sq += basis.lambdas[i] * basis.lambdas[i];
    for (int j = 0; j < 8; ++j) {
      const double target = (i == j) ? 2.0 : 0.0;
      const Complex tr = (basis.lambdas[i] * basis.lambdas[j]).trace();
      worst = std::max(worst, std::abs(tr - target));
    }
  }
  const ComplexMatrix expected =
      (16.0 / 3.0) * ComplexMatrix::Identity(3, 3);
  worst = std::max(worst, (sum_sq - expected).cwiseAbs().maxCoeff());
  return worst;
}

double bloch_length_sq(const ComplexMatrix& rho, const GeneratorBasis& b) {
  double total = 0.0;
  for (const ComplexMatrix& op : b.lambdas) {
    const double mean = (rho * op).trace().real();
    total += mean * mean;
  }
  return total;
}

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
};

std::vector<Check> run_verification(const VerifyOptions& options) {
  std::vector<Check> checks;
  GeneratorBasis basis = make_canonical_basis();
  if (options.corrupt_generator >= 0 && options.corrupt_generator < 8)
    basis.lambdas[options.corrupt_generator](0, 0) += 1e-3;

  // Generator algebra on the canonical ordering.
  checks.push_back({"generator algebra", basis_algebra_residual(basis),
                    1e-12});

  // The same identities after random orthogonal remixes.
  {
    std::mt19937_64 gen(options.seed + 101);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const GeneratorBasis rotated =
          rotate_basis(basis, random_orthogonal8(gen));
      worst = std::max(worst, basis_algebra_residual(rotated));
    }
    checks.push_back({"rotated generator invariants", worst, 1e-10});
  }

  // Frame orthogonality, normalization and side-1 pairing identities.
  {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double a = i / 100.0;
      const AsymmetricFrame frame = make_asymmetric_frame(a);
      worst = std::max(
          worst, (frame.mixing * frame.mixing.transpose() -
                  Eigen::Matrix3d::Identity())
                     .cwiseAbs()
                     .maxCoeff());
      const std::array<const ComplexMatrix*, 3> ops = {&frame.z, &frame.fxy,
                                                       &frame.fz};
      for (const ComplexMatrix* op : ops) {
        worst = std::max(worst,
                         (*op - op->adjoint()).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(op->trace()));
        worst = std::max(worst,
                         std::abs(((*op) * (*op)).trace().real() - 2.0));
      }
      worst = std::max(worst,
                       std::abs((frame.z * frame.fxy).trace()));
      worst = std::max(worst, std::abs((frame.z * frame.fz).trace()));
      worst = std::max(worst, std::abs((frame.fxy * frame.fz).trace()));

      const OperatorPairing pairing = make_aligned_pairing(a);
      ComplexMatrix sum_sq = ComplexMatrix::Zero(3, 3);
      for (const ComplexMatrix& op : pairing.side1) sum_sq += op * op;
      worst = std::max(
          worst, (sum_sq - (16.0 / 3.0) * ComplexMatrix::Identity(3, 3))
                     .cwiseAbs()
                     .maxCoeff());
    }
    checks.push_back({"asymmetric frame identities", worst, 1e-12});
  }

  // Purity identity and the Bloch length bound.
  {
    std::mt19937_64 gen(options.seed + 202);
    double worst_purity = 0.0;
    double worst_bound = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const ComplexMatrix rho = random_density(gen, 3);
      const double lhs = (rho * rho).trace().real();
      const double len_sq = bloch_length_sq(rho, basis);
      worst_purity =
          std::max(worst_purity, std::abs(lhs - (1.0 / 3.0 + 0.5 * len_sq)));
      worst_bound = std::max(worst_bound, len_sq - 4.0 / 3.0);
    }
    for (int k = 0; k < 1000; ++k) {
      const ComplexMatrix rho = random_pure_density(gen, 3);
      worst_bound = std::max(
          worst_bound, std::abs(bloch_length_sq(rho, basis) - 4.0 / 3.0));
    }
    checks.push_back({"purity identity", worst_purity, 1e-12});
    checks.push_back({"bloch length bound", worst_bound, 1e-10});
  }

  // Local uncertainty sum: range [4, 16/3], pure states saturate 4.
  {
    std::mt19937_64 gen(options.seed + 303);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double s = purity_uncertainty_sum(random_density(gen, 3), basis);
      worst = std::max(worst, std::max(4.0 - s, s - 16.0 / 3.0));
    }
    for (int k = 0; k < 1000; ++k) {
      const double s =
          purity_uncertainty_sum(random_pure_density(gen, 3), basis);
      worst = std::max(worst, std::abs(s - 4.0));
    }
    checks.push_back({"uncertainty sum bounds", worst, 1e-10});
  }

  // Variance sum decomposition: lur_sum = 32/3 - 2 K - sum of mismatches^2,
  // on the family grid and on random separable states.
  {
    std::mt19937_64 gen(options.seed + 404);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    auto identity_residual = [](const BipartiteState& state,
                                const OperatorPairing& pairing) {
      const double direct = lur_sum(state, pairing);
      const double k = correlation_sum(state, pairing);
      const double mm = mismatch(state, pairing).squaredNorm();
      return std::abs(direct - (32.0 / 3.0 - 2.0 * k - mm));
    };
    for (int i = 0; i <= 100; ++i) {
      const double a = i / 100.0;
      worst = std::max(identity_residual(make_bound_state(a),
                                         make_aligned_pairing(a)),
                       worst);
    }
    for (int k = 0; k < 1000; ++k) {
      const double a = unif(gen);
      const BipartiteState state = sample_separable(gen(), 1 + k % 9);
      worst =
          std::max(worst, identity_residual(state, make_aligned_pairing(a)));
    }
    checks.push_back({"variance sum decomposition", worst, 1e-10});
  }

  // Violation against its closed form, and the mismatch closed forms.
  {
    double worst_c = 0.0;
    double worst_m = 0.0;
    double worst_k = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double a = i / 100.0;
      const BipartiteState state = make_bound_state(a);
      const OperatorPairing pairing = make_aligned_pairing(a);
      worst_c = std::max(
          worst_c, std::abs(c_lur(state, pairing) - c_lur_closed_form(a)));

      const RealVector m = mismatch(state, pairing);
      const double denom = (2.0 + a) * (1.0 + 8.0 * a);
      const double m7 = -3.0 * a * std::sqrt(1.0 - a * a) / denom;
      const double m8 = std::sqrt(3.0) * a * (1.0 - a) / denom;
      for (int j = 0; j < 6; ++j) worst_m = std::max(worst_m, std::abs(m(j)));
      worst_m = std::max(worst_m, std::abs(m(6) - m7));
      worst_m = std::max(worst_m, std::abs(m(7) - m8));

      worst_k = std::max(worst_k,
                         std::abs(correlation_sum(state, pairing) - 4.0 / 3.0));
      worst_k =
          std::max(worst_k, std::abs(optimal_k_total(state) - 4.0 / 3.0));
    }
    checks.push_back({"violation closed form", worst_c, 1e-10});
    checks.push_back({"mismatch closed forms", worst_m, 1e-10});
    checks.push_back({"correlation total, both routes", worst_k, 1e-10});
  }

  // No separable state may dip below the bound of 8.
  {
    std::mt19937_64 gen(options.seed + 505);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double min_sum = 1e9;
    for (int k = 0; k < 10000; ++k) {
      const BipartiteState state = sample_separable(gen(), 1 + k % 9);
      min_sum =
          std::min(min_sum, lur_sum(state, make_aligned_pairing(unif(gen))));
    }
    checks.push_back(
        {"separability guard", std::max(0.0, 8.0 - min_sum), 1e-9});
  }

  // Positivity of the partial transpose across the family.
  {
    double min_eig = 1e9;
    for (int i = 0; i <= 1000; ++i)
      min_eig = std::min(
          min_eig, ppt_check(make_bound_state(i / 1000.0)).min_eigenvalue);
    checks.push_back({"ppt across family", std::max(0.0, -min_eig), 1e-12});

    BipartiteState e_max{ComplexMatrix::Zero(9, 9)};
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
    v(0) = v(4) = v(8) = 1.0 / std::sqrt(3.0);
    e_max.rho = v * v.adjoint();
    checks.push_back({"ppt negative control",
                      std::abs(ppt_check(e_max).min_eigenvalue + 1.0 / 3.0),
                      1e-10});
  }

  // The violation of the noisy mixture flips exactly at the threshold.
  {
    const double a = 0.3077;
    const double threshold = noise_threshold(a);
    const BipartiteState state = make_bound_state(a);
    const OperatorPairing pairing = make_aligned_pairing(a);
    auto measured = [&](double p) {
      return c_lur(mix_with_white_noise(state, p), pairing);
    };
    double lo = 0.0, hi = 0.49;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (measured(mid) > 0.0 ? lo : hi) = mid;
    }
    const double numeric_flip = 0.5 * (lo + hi);
    double residual = std::abs(numeric_flip - threshold);
    const double eps = std::min(1e-4, threshold / 2.0);
    if (!(measured(threshold - eps) > 0.0 && measured(threshold + eps) < 0.0))
      residual = 1.0;
    checks.push_back({"noise threshold flip", residual, 1e-6});
  }

  if (options.tol >= 0.0)
    for (Check& check : checks) check.tol = options.tol;
  return checks;
}

}  // namespace

std::string format_sig17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const std::vector<Check> checks = run_verification(options);
  int failures = 0;
  for (const Check& check : checks) {
    const bool pass = check.residual <= check.tol;
    failures += pass ? 0 : 1;
    char line[128];
    std::snprintf(line, sizeof line, "[%s] %-32s residual %.3e  (tol %.0e)",
                  pass ? "PASS" : "FAIL", check.name.c_str(), check.residual,
                  check.tol);
    out << line << '\n';
  }
  out << (failures == 0 ? "all checks passed"
                        : std::to_string(failures) + " check(s) failed")
      << '\n';
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

SweepRow compute_sweep_row(double a, double p_noise) {
  const ViolationReport report = make_violation_report(a, p_noise);
  SweepRow row;
  row.a = a;
  row.c_lur = report.c_lur;
  row.c_lur_closed = c_lur_closed_form(a);
  row.k_total_pairing = report.k_total;
  row.k_total_svd = optimal_k_total(make_state({a, p_noise}));
  row.lur_sum = report.lur_sum;
  row.mismatch7 = report.mismatch7;
  row.mismatch8 = report.mismatch8;
  row.min_pt_eigenvalue = report.min_pt_eigenvalue;
  row.noise_threshold = report.noise_threshold;
  return row;
}

std::vector<SweepRow> compute_sweep(const SweepOptions& options) {
  if (!(options.a_min >= 0.0 && options.a_min < options.a_max &&
        options.a_max <= 1.0))
    throw ArgumentError("sweep: requires 0 <= a_min < a_max <= 1");
  if (options.steps < 2) throw ArgumentError("sweep: requires steps >= 2");
  if (!(options.p_noise >= 0.0 && options.p_noise < 1.0))
    throw ArgumentError("sweep: requires p_noise in [0, 1)");

  const double step =
      (options.a_max - options.a_min) / (options.steps - 1);
  std::vector<SweepRow> rows;
  rows.reserve(options.steps);
  for (int i = 0; i < options.steps; ++i) {
    const double a = (i == options.steps - 1)
                         ? options.a_max
                         : std::min(options.a_min + i * step, options.a_max);
    rows.push_back(compute_sweep_row(a, options.p_noise));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "a,c_lur,c_lur_closed,k_total_pairing,k_total_svd,lur_sum,"
         "mismatch7,mismatch8,min_pt_eigenvalue,noise_threshold\n";
  for (const SweepRow& r : rows) {
    out << format_sig17(r.a) << ',' << format_sig17(r.c_lur) << ','
        << format_sig17(r.c_lur_closed) << ','
        << format_sig17(r.k_total_pairing) << ','
        << format_sig17(r.k_total_svd) << ',' << format_sig17(r.lur_sum)
        << ',' << format_sig17(r.mismatch7) << ','
        << format_sig17(r.mismatch8) << ','
        << format_sig17(r.min_pt_eigenvalue) << ','
        << format_sig17(r.noise_threshold) << '\n';
  }
}

int cmd_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    rows = compute_sweep(options);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (options.out_path.empty()) {
    write_sweep_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(options.out_path);
  if (!file) {
    err << "error: cannot open '" << options.out_path << "' for writing\n";
    return kExitUsage;
  }
  write_sweep_csv(file, rows);
  file.flush();
  if (!file) {
    err << "error: failed while writing '" << options.out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_optimize(const OptimizeOptions& options, std::ostream& out,
                 std::ostream& err) {
  if (!(options.tol > 0.0)) {
    err << "error: tol must be positive\n";
    return kExitUsage;
  }
  const ScalarMax peak = golden_section_max(
      [](double a) { return c_lur_closed_form(a); }, 0.0, 1.0, options.tol);
  out << "a_star = " << format_sig17(peak.argmax) << '\n';
  out << "c_lur(a_star) = " << format_sig17(peak.max) << '\n';
  out << "noise_threshold(a_star) = "
      << format_sig17(noise_threshold(peak.argmax)) << '\n';
  return kExitOk;
}

namespace {

constexpr const char* kBasisConvention =
    "|+1>,|0>,|-1> per side; index = 3*idx(m1)+idx(m2)";

void write_state_csv(std::ostream& out, const ComplexMatrix& rho) {
  out << "# basis: " << kBasisConvention << '\n';
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      if (j > 0) out << ',';
      out << format_sig17(rho(i, j).real()) << ','
          << format_sig17(rho(i, j).imag());
    }
    out << '\n';
  }
}

void write_state_json(std::ostream& out, const StateOptions& options,
                      const ComplexMatrix& rho) {
  json doc;
  doc["basis"] = kBasisConvention;
  doc["a"] = options.a;
  doc["p_noise"] = options.p_noise;
  json re = json::array(), im = json::array();
  for (int i = 0; i < 9; ++i) {
    json re_row = json::array(), im_row = json::array();
    for (int j = 0; j < 9; ++j) {
      re_row.push_back(rho(i, j).real());
      im_row.push_back(rho(i, j).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  doc["re"] = re;
  doc["im"] = im;
  out << doc.dump(2) << '\n';
}

}  // namespace

int cmd_state(const StateOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.format != "csv" && options.format != "json") {
    err << "error: format must be csv or json\n";
    return kExitUsage;
  }
  BipartiteState state;
  try {
    state = make_state({options.a, options.p_noise});
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto emit = [&](std::ostream& sink) {
    if (options.format == "csv")
      write_state_csv(sink, state.rho);
    else
      write_state_json(sink, options, state.rho);
  };
  if (options.out_path.empty()) {
    emit(out);
    return kExitOk;
  }
  std::ofstream file(options.out_path);
  if (!file) {
    err << "error: cannot open '" << options.out_path << "' for writing\n";
    return kExitUsage;
  }
  emit(file);
  file.flush();
  return file ? kExitOk : kExitUsage;
}

int cmd_noise(const NoiseOptions& options, std::ostream& out,
              std::ostream& err) {
  double c_closed = 0.0;
  try {
    c_closed = c_lur_closed_form(options.a);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const double threshold = noise_threshold(options.a);
  out << "a = " << format_sig17(options.a) << '\n';
  out << "c_lur = " << format_sig17(c_closed) << '\n';
  out << "noise_threshold = " << format_sig17(threshold) << '\n';
  if (threshold <= 0.0) {
    out << "no violation at p_noise = 0; nothing to protect\n";
    return kExitOk;
  }

  const BipartiteState state = make_bound_state(options.a);
  const OperatorPairing pairing = make_aligned_pairing(options.a);
  const double eps = std::min(1e-4, threshold / 2.0);
  const double below =
      c_lur(mix_with_white_noise(state, threshold - eps), pairing);
  const double above =
      c_lur(mix_with_white_noise(state, threshold + eps), pairing);
  out << "c_lur at threshold - " << format_sig17(eps) << " = "
      << format_sig17(below) << '\n';
  out << "c_lur at threshold + " << format_sig17(eps) << " = "
      << format_sig17(above) << '\n';
  const bool flipped = below > 0.0 && above < 0.0;
  out << (flipped ? "violation flips across the threshold: confirmed"
                  : "violation does NOT flip across the threshold")
      << '\n';
  return flipped ? kExitOk : kExitVerifyFailed;
}

}  // namespace lurkit::cli
