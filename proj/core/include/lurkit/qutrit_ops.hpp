#pragma once

#include <array>
#include <string>

#include "lurkit/numerics.hpp"

namespace lurkit {

// All 3x3 operators use the basis ordering (|+1>, |0>, |-1>) <-> (0, 1, 2),
// so l_z = diag(1, 0, -1).

/// Spin-1 angular momentum components (hbar = 1).
struct SpinOperators {
  ComplexMatrix lx, ly, lz;
};

SpinOperators make_spin_operators();

/// Quadratic spin observables: anticommutators Q_ij = l_i l_j + l_j l_i,
/// the rank-2 alignment S_xy = lx^2 - ly^2 and G_z = sqrt(3)(lz^2 - 2/3).
struct QuadraticOperators {
  ComplexMatrix qxy, qyz, qzx, sxy, gz;
};

QuadraticOperators make_quadratics(const SpinOperators& s);

/// Eight traceless Hermitian qutrit operators, orthonormal under the trace
/// inner product (Tr l_i l_j = 2 d_ij) with sum of squares (16/3) I.
struct GeneratorBasis {
  std::array<ComplexMatrix, 8> lambdas;
  std::array<std::string, 8> labels;
};

/// The canonical ordering (l_x, l_y, Q_xy, Q_yz, Q_zx, l_z, S_xy, G_z).
GeneratorBasis make_canonical_basis();

/// The a-dependent orthogonal remix of (l_z, S_xy, G_z) used on side 1 of
/// the aligned pairing. `mixing` rows hold the coefficients of (Z, F_xy,
/// F_z) over the basis (l_z, S_xy, G_z), in that order.
struct AsymmetricFrame {
  double a = 0.0;
  ComplexMatrix z, fxy, fz;
  Eigen::Matrix3d mixing;
};

/// Builds the frame
///   Z    = -(1/2) l_z + (sqrt(3)/2) G_z
///   F_xy = t S_xy + r W,   F_z = t W - r S_xy,
/// with W = (sqrt(3)/2) l_z + (1/2) G_z, t = (1+2a)/(2+a) and
/// r = sqrt(3(1-a^2))/(2+a). The z-axis enters with inverted sign relative
/// to side 2; with this orientation the aligned correlation total of the
/// bound family reaches its orthogonal-frame maximum 4/3 for every a, which
/// the test suite pins end to end. Throws ArgumentError unless a is in [0,1].
AsymmetricFrame make_asymmetric_frame(double a);

/// Applies an orthogonal 8x8 rotation to a generator basis:
/// lambda'_i = sum_j rot(i,j) lambda_j. Orthonormality and the sum-of-squares
/// identity survive any such rotation. Throws ArgumentError if rot deviates
/// from orthogonality by more than 1e-10.
GeneratorBasis rotate_basis(const GeneratorBasis& basis,
                            const Eigen::Matrix<double, 8, 8>& rot);

}  // namespace lurkit
