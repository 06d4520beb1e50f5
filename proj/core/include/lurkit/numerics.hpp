#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>

#include "lurkit/errors.hpp"

namespace lurkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Hermiticity gate (max-norm) and the shared "numerically zero" floor for
// positivity margins. Everything here is 9x9 or smaller, so near-machine
// precision is achievable and enforced.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPositivityFloor = -1e-12;

/// Kronecker product; block (i,j) of the result equals a(i,j)*b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial transpose on the second factor of a 9x9 matrix viewed as a
/// 3x3 grid of 3x3 blocks. Involutive. Throws DimensionError unless dim = 9.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m);

/// Reduce a 9x9 matrix to the kept side (1 or 2). Trace-preserving.
ComplexMatrix partial_trace(const ComplexMatrix& m, int keep_side);

/// Eigenvalues of a Hermitian matrix, sorted ascending. The input must be
/// Hermitian within kHermitianTol in max-norm; otherwise ContractError.
RealVector eig_hermitian(const ComplexMatrix& m);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns, matching values
};

/// Eigenvalues and eigenvectors of a Hermitian matrix.
HermitianEigen eig_hermitian_full(const ComplexMatrix& m);

/// Singular values of a real matrix, sorted descending.
RealVector singular_values(const RealMatrix& m);

/// Sum of singular values; equals max over orthogonal O of trace(O*m).
double nuclear_norm(const RealMatrix& m);

struct ScalarMax {
  double argmax = 0.0;
  double max = 0.0;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// The argmax is located to within tol. Unimodality is the caller's problem.
ScalarMax golden_section_max(const std::function<double(double)>& f, double lo,
                             double hi, double tol);

}  // namespace lurkit
