#include "lurkit/lur.hpp"

#include <cmath>

#include "lurkit/witnesses.hpp"

namespace lurkit {

namespace {

constexpr double kImagTol = 1e-12;

double real_checked(Complex value, const char* who) {
  if (std::abs(value.imag()) > kImagTol)
    throw ContractError(std::string(who) +
                        ": imaginary residue above tolerance");
  return value.real();
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& op,
                   const char* who) {
  return real_checked((rho * op).trace(), who);
}

}  // namespace

OperatorPairing make_aligned_pairing(double a) {
  const AsymmetricFrame frame = make_asymmetric_frame(a);  // validates a
  const SpinOperators s = make_spin_operators();
  const QuadraticOperators q = make_quadratics(s);

  OperatorPairing pairing;
  pairing.side1 = {s.lx,   -s.ly,    -q.qxy,    -q.qyz,
                   q.qzx,  frame.z,  frame.fxy, frame.fz};
  pairing.side2 = {s.lx, s.ly, q.qxy, q.qyz, q.qzx, s.lz, q.sxy, q.gz};
  return pairing;
}

double correlation_sum(const BipartiteState& state,
                       const OperatorPairing& pairing) {
  Complex total = 0.0;
  for (int i = 0; i < 8; ++i)
    total += (state.rho * kron(pairing.side1[i], pairing.side2[i])).trace();
  return real_checked(total, "correlation_sum");
}

RealMatrix correlation_matrix(const BipartiteState& state,
                              const GeneratorBasis& basis1,
                              const GeneratorBasis& basis2) {
  RealMatrix c(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      c(i, j) = expectation(state.rho,
                            kron(basis1.lambdas[i], basis2.lambdas[j]),
                            "correlation_matrix");
  return c;
}

double optimal_k_total(const BipartiteState& state) {
  const GeneratorBasis canonical = make_canonical_basis();
  return nuclear_norm(correlation_matrix(state, canonical, canonical));
}

double lur_sum(const BipartiteState& state, const OperatorPairing& pairing) {
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  double total = 0.0;
  for (int i = 0; i < 8; ++i) {
    const ComplexMatrix diff =
        kron(pairing.side1[i], id) - kron(id, pairing.side2[i]);
    const double mean = expectation(state.rho, diff, "lur_sum");
    total += expectation(state.rho, diff * diff, "lur_sum") - mean * mean;
  }
  return total;
}

RealVector mismatch(const BipartiteState& state,
                    const OperatorPairing& pairing) {
  const ComplexMatrix rho1 = partial_trace(state.rho, 1);
  const ComplexMatrix rho2 = partial_trace(state.rho, 2);
  RealVector m(8);
  for (int i = 0; i < 8; ++i)
    m(i) = (rho1 * pairing.side1[i]).trace().real() -
           (rho2 * pairing.side2[i]).trace().real();
  return m;
}

double c_lur(const BipartiteState& state, const OperatorPairing& pairing) {
  return 1.0 - lur_sum(state, pairing) / 8.0;
}

double c_lur_closed_form(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw ArgumentError("c_lur_closed_form: a must lie in [0, 1]");
  return 3.0 * a * a * (1.0 - a) /
         (4.0 * (2.0 + a) * (1.0 + 8.0 * a) * (1.0 + 8.0 * a));
}

double noise_threshold(double a) {
  const double c = c_lur_closed_form(a);  // validates a
  if (c <= 0.0) return 0.0;

  // p / (3(1-p)^2) is monotone increasing on [0, 1/2], so the root is unique.
  auto excess = [c](double p) {
    return p / (3.0 * (1.0 - p) * (1.0 - p)) - c;
  };
  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double purity_uncertainty_sum(const ComplexMatrix& rho_local,
                              const GeneratorBasis& basis) {
  if (!is_density_matrix(rho_local) || rho_local.rows() != 3)
    throw ContractError(
        "purity_uncertainty_sum: not a valid 3x3 density matrix");
  double total = 0.0;
  for (const ComplexMatrix& op : basis.lambdas) {
    const double mean = (rho_local * op).trace().real();
    total += (rho_local * op * op).trace().real() - mean * mean;
  }
  return total;
}

ViolationReport make_violation_report(double a, double p_noise) {
  const BipartiteState state = make_state({a, p_noise});
  const OperatorPairing pairing = make_aligned_pairing(a);
  const RealVector m = mismatch(state, pairing);

  ViolationReport report;
  report.a = a;
  report.p_noise = p_noise;
  report.k_total = correlation_sum(state, pairing);
  report.lur_sum = lur_sum(state, pairing);
  report.mismatch7 = m(6);
  report.mismatch8 = m(7);
  report.c_lur = 1.0 - report.lur_sum / 8.0;
  report.min_pt_eigenvalue = ppt_check(state).min_eigenvalue;
  report.noise_threshold = noise_threshold(a);
  return report;
}

}  // namespace lurkit
