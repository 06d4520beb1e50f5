#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "lurkit/lur.hpp"
#include "lurkit/states.hpp"
#include "test_support.hpp"

using namespace lurkit;
using namespace lurkit::cli;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
  int count = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos) ++count;
  return count;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text,
                                                bool skip_header) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  if (skip_header) std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ','))
      row.push_back(std::strtod(field.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("format_sig17 round-trips doubles exactly") {
  CHECK(format_sig17(1.0 / 3.0) == "3.3333333333333331e-01");
  std::mt19937_64 gen(73);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = std::ldexp(unif(gen), int(gen() % 64) - 32);
    const double parsed =
        std::strtod(format_sig17(x).c_str(), nullptr);
    CHECK(parsed == x);
  }
}

TEST_CASE("verify passes by default and reports one line per check") {
  std::ostringstream out;
  CHECK(cmd_verify({}, out) == kExitOk);
  const std::string report = out.str();
  CHECK(count_lines_with(report, "[PASS]") == 14);
  CHECK(count_lines_with(report, "[FAIL]") == 0);
  CHECK(report.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify is byte-deterministic for a fixed seed") {
  std::ostringstream first, second, other;
  VerifyOptions options;
  options.seed = 7;
  cmd_verify(options, first);
  cmd_verify(options, second);
  CHECK(first.str() == second.str());
  options.seed = 8;
  CHECK(cmd_verify(options, other) == kExitOk);
}

TEST_CASE("verify fails loudly on a corrupted generator") {
  std::ostringstream out;
  VerifyOptions options;
  options.corrupt_generator = 2;
  CHECK(cmd_verify(options, out) == kExitVerifyFailed);
  CHECK(count_lines_with(out.str(), "[FAIL]") >= 1);
}

TEST_CASE("verify tolerance override applies to every check") {
  std::ostringstream out;
  VerifyOptions options;
  options.tol = 1e-30;  // nothing survives a sub-epsilon gate
  CHECK(cmd_verify(options, out) == kExitVerifyFailed);
  std::ostringstream loose;
  options.tol = 1e-3;
  CHECK(cmd_verify(options, loose) == kExitOk);
}

TEST_CASE("sweep rows satisfy their invariants at zero noise") {
  SweepOptions options;
  options.steps = 21;
  const std::vector<SweepRow> rows = compute_sweep(options);
  REQUIRE(rows.size() == 21);
  CHECK(rows.front().a == 0.0);
  CHECK(rows.back().a == 1.0);
  for (const SweepRow& row : rows) {
    CHECK(std::abs(row.c_lur - row.c_lur_closed) <= 1e-10);
    CHECK(std::abs(row.k_total_pairing - 4.0 / 3.0) <= 1e-10);
    CHECK(std::abs(row.k_total_svd - 4.0 / 3.0) <= 1e-10);
    CHECK(row.min_pt_eigenvalue >= -1e-12);
  }
  // endpoints carry no violation
  CHECK(rows.front().c_lur_closed == 0.0);
  CHECK(rows.back().c_lur_closed == 0.0);
}

TEST_CASE("sweep row at a = 0.5 reproduces the closed-form spot value") {
  SweepOptions options;
  options.steps = 3;  // grid {0, 0.5, 1}
  const std::vector<SweepRow> rows = compute_sweep(options);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].a == 0.5);
  CHECK(std::abs(rows[1].c_lur - 0.0015) < 1e-10);
  CHECK(std::abs(rows[1].noise_threshold - 0.004459949960546509) < 2e-12);
}

TEST_CASE("noise above every threshold kills the violation") {
  SweepOptions options;
  options.steps = 21;
  options.p_noise = 0.01;  // larger than the maximal threshold 0.00528
  for (const SweepRow& row : compute_sweep(options))
    CHECK(row.c_lur <= 0.0);
}

TEST_CASE("sweep CSV has the pinned header and parses back") {
  SweepOptions options;
  options.steps = 5;
  const std::vector<SweepRow> rows = compute_sweep(options);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  const std::string text = out.str();
  CHECK(text.rfind("a,c_lur,c_lur_closed,k_total_pairing,k_total_svd,"
                   "lur_sum,mismatch7,mismatch8,min_pt_eigenvalue,"
                   "noise_threshold\n",
                   0) == 0);
  const auto parsed = parse_csv_rows(text, true);
  REQUIRE(parsed.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(parsed[i].size() == 10);
    CHECK(parsed[i][0] == rows[i].a);
    CHECK(parsed[i][1] == rows[i].c_lur);
    CHECK(parsed[i][5] == rows[i].lur_sum);
    CHECK(parsed[i][9] == rows[i].noise_threshold);
  }
}

TEST_CASE("sweep argument and IO failures exit with code 2") {
  std::ostringstream out, err;
  SweepOptions bad_range;
  bad_range.a_min = 0.7;
  bad_range.a_max = 0.2;
  CHECK(cmd_sweep(bad_range, out, err) == kExitUsage);

  SweepOptions bad_steps;
  bad_steps.steps = 1;
  CHECK(cmd_sweep(bad_steps, out, err) == kExitUsage);

  SweepOptions bad_path;
  bad_path.steps = 2;
  bad_path.out_path = "/nonexistent-dir/deep/sweep.csv";
  CHECK(cmd_sweep(bad_path, out, err) == kExitUsage);
  CHECK(err.str().find("error:") != std::string::npos);
}

TEST_CASE("optimize prints the optimum and the threshold") {
  std::ostringstream out, err;
  CHECK(cmd_optimize({1e-8}, out, err) == kExitOk);
  const std::string text = out.str();
  double a_star = 0.0, c_max = 0.0, threshold = 0.0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    REQUIRE(eq != std::string::npos);
    const double value = std::strtod(line.c_str() + eq + 3, nullptr);
    if (line.rfind("a_star ", 0) == 0) a_star = value;
    if (line.rfind("c_lur(", 0) == 0) c_max = value;
    if (line.rfind("noise_threshold(", 0) == 0) threshold = value;
  }
  CHECK(std::abs(a_star - 0.3077) < 1e-3);
  CHECK(std::abs(c_max - 0.00178) < 1e-5);
  CHECK(std::abs(threshold - 0.0053) < 1e-4);

  std::ostringstream out2, err2;
  CHECK(cmd_optimize({0.0}, out2, err2) == kExitUsage);
}

TEST_CASE("state export round-trips through CSV") {
  StateOptions options;
  options.a = 0.5;
  std::ostringstream out, err;
  REQUIRE(cmd_state(options, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(text.rfind("# basis: |+1>,|0>,|-1> per side; "
                   "index = 3*idx(m1)+idx(m2)\n",
                   0) == 0);
  const auto rows = parse_csv_rows(text, false);
  REQUIRE(rows.size() == 9);
  const ComplexMatrix rho = make_bound_state(0.5).rho;
  for (int i = 0; i < 9; ++i) {
    REQUIRE(rows[i].size() == 18);
    for (int j = 0; j < 9; ++j) {
      CHECK(rows[i][2 * j] == rho(i, j).real());
      CHECK(rows[i][2 * j + 1] == rho(i, j).imag());
    }
  }
  CHECK(std::abs(rows[4][8] - 0.1) < 1e-15);  // |0;0> weight at a = 0.5
}

TEST_CASE("state export at a = 0 is the rank-one product matrix") {
  StateOptions options;
  options.a = 0.0;
  std::ostringstream out, err;
  REQUIRE(cmd_state(options, out, err) == kExitOk);
  const auto rows = parse_csv_rows(out.str(), false);
  REQUIRE(rows.size() == 9);
  Eigen::MatrixXd re(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) re(i, j) = rows[i][2 * j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(re);
  CHECK(svd.singularValues()(0) > 0.99);
  CHECK(svd.singularValues()(1) < 1e-14);
}

TEST_CASE("state export round-trips through JSON") {
  StateOptions options;
  options.a = 0.5;
  options.p_noise = 0.1;
  options.format = "json";
  std::ostringstream out, err;
  REQUIRE(cmd_state(options, out, err) == kExitOk);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["a"] == 0.5);
  CHECK(doc["p_noise"] == 0.1);
  CHECK(doc["basis"].get<std::string>().find("|+1>,|0>,|-1>") !=
        std::string::npos);
  const ComplexMatrix rho = make_state({0.5, 0.1}).rho;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      CHECK(doc["re"][i][j].get<double>() == rho(i, j).real());
      CHECK(doc["im"][i][j].get<double>() == rho(i, j).imag());
    }
}

TEST_CASE("state rejects bad parameters and formats") {
  std::ostringstream out, err;
  StateOptions bad_a;
  bad_a.a = 1.5;
  CHECK(cmd_state(bad_a, out, err) == kExitUsage);
  StateOptions bad_noise;
  bad_noise.a = 0.5;
  bad_noise.p_noise = 1.0;
  CHECK(cmd_state(bad_noise, out, err) == kExitUsage);
  StateOptions bad_format;
  bad_format.a = 0.5;
  bad_format.format = "xml";
  CHECK(cmd_state(bad_format, out, err) == kExitUsage);
}

TEST_CASE("noise command confirms the flip and handles the endpoints") {
  std::ostringstream out, err;
  CHECK(cmd_noise({0.3077}, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(text.find("confirmed") != std::string::npos);
  const auto pos = text.find("noise_threshold = ");
  REQUIRE(pos != std::string::npos);
  const double threshold =
      std::strtod(text.c_str() + pos + 18, nullptr);
  CHECK(std::abs(threshold - 0.005277191812095767) < 2e-12);

  std::ostringstream at_zero, err0;
  CHECK(cmd_noise({0.0}, at_zero, err0) == kExitOk);
  CHECK(at_zero.str().find("no violation") != std::string::npos);

  std::ostringstream half, err_half;
  CHECK(cmd_noise({0.5}, half, err_half) == kExitOk);
  const auto pos_half = half.str().find("noise_threshold = ");
  REQUIRE(pos_half != std::string::npos);
  CHECK(std::abs(std::strtod(half.str().c_str() + pos_half + 18, nullptr) -
                 0.004459949960546509) < 1e-6);

  std::ostringstream bad, err_bad;
  CHECK(cmd_noise({2.0}, bad, err_bad) == kExitUsage);
}

TEST_CASE("sweep output is byte-identical across repeated renders") {
  SweepOptions options;
  options.steps = 17;
  options.p_noise = 0.001;
  std::ostringstream first, second;
  write_sweep_csv(first, compute_sweep(options));
  write_sweep_csv(second, compute_sweep(options));
  CHECK(first.str() == second.str());
}
