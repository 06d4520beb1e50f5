#pragma once

#include <array>

#include "lurkit/numerics.hpp"
#include "lurkit/qutrit_ops.hpp"
#include "lurkit/states.hpp"

namespace lurkit {

/// Eight aligned operator pairs (side-1 operator, side-2 operator). Each
/// side on its own is an orthogonal rotation of the canonical generator
/// basis, so each side independently satisfies the generator identities.
struct OperatorPairing {
  std::array<ComplexMatrix, 8> side1;
  std::array<ComplexMatrix, 8> side2;
};

/// The alignment that maximizes the correlation total for the bound family:
/// side 2 carries the canonical basis, side 1 carries
///   (l_x, -l_y, -Q_xy, -Q_yz, Q_zx, Z, F_xy, F_z)
/// with (Z, F_xy, F_z) from make_asymmetric_frame(a).
OperatorPairing make_aligned_pairing(double a);

/// K_total = sum_i <op1_i x op2_i>. Throws ContractError if the trace picks
/// up an imaginary residue above 1e-12 (a non-Hermitian pairing).
double correlation_sum(const BipartiteState& state,
                       const OperatorPairing& pairing);

/// Entry (i,j) = <lambda_i(1) x lambda_j(2)>.
RealMatrix correlation_matrix(const BipartiteState& state,
                              const GeneratorBasis& basis1,
                              const GeneratorBasis& basis2);

/// Maximum of the correlation total over all orthogonal rotations of the
/// side-1 frame: the nuclear norm of the canonical correlation matrix.
double optimal_k_total(const BipartiteState& state);

/// Sum over pairs of the variances of (op1_i x 1 - 1 x op2_i). Every
/// separable state gives at least 8; the bound family dips below.
double lur_sum(const BipartiteState& state, const OperatorPairing& pairing);

/// Component i = <op1_i x 1> - <1 x op2_i>.
RealVector mismatch(const BipartiteState& state,
                    const OperatorPairing& pairing);

/// Relative violation: 1 - lur_sum/8. Positive iff the relation is violated.
double c_lur(const BipartiteState& state, const OperatorPairing& pairing);

/// Closed form for the bound family: 3a^2(1-a) / (4(2+a)(1+8a)^2).
double c_lur_closed_form(double a);

/// Largest white-noise weight that keeps the violation alive: the unique
/// p in [0, 1/2] with p/(3(1-p)^2) = c_lur_closed_form(a), by bisection to
/// 1e-12. Zero when there is no violation to protect.
double noise_threshold(double a);

/// Single-qutrit uncertainty sum over the basis: sum_i Var(lambda_i).
/// Equals 6 - 2 Tr(rho^2); at least 4, saturated exactly by pure states.
/// Throws ContractError unless rho_local is a valid density matrix.
double purity_uncertainty_sum(const ComplexMatrix& rho_local,
                              const GeneratorBasis& basis);

/// All scalar diagnostics for one (a, p_noise) point.
struct ViolationReport {
  double a = 0.0;
  double p_noise = 0.0;
  double k_total = 0.0;
  double lur_sum = 0.0;
  double mismatch7 = 0.0;
  double mismatch8 = 0.0;
  double c_lur = 0.0;
  double min_pt_eigenvalue = 0.0;
  double noise_threshold = 0.0;
};

ViolationReport make_violation_report(double a, double p_noise);

}  // namespace lurkit
