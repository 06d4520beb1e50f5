#include "lurkit/numerics.hpp"

#include <cmath>

namespace lurkit {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
  if (m.rows() != 9 || m.cols() != 9)
    throw DimensionError("partial_transpose_b: expected a 9x9 matrix");
  ComplexMatrix out(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.block<3, 3>(3 * i, 3 * j) =
          m.block<3, 3>(3 * i, 3 * j).transpose();
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int keep_side) {
  if (m.rows() != 9 || m.cols() != 9)
    throw DimensionError("partial_trace: expected a 9x9 matrix");
  if (keep_side != 1 && keep_side != 2)
    throw ArgumentError("partial_trace: keep_side must be 1 or 2");
  ComplexMatrix out = ComplexMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out(i, j) += (keep_side == 1) ? m(3 * i + k, 3 * j + k)
                                      : m(3 * k + i, 3 * k + j);
  return out;
}

namespace {

void require_hermitian(const ComplexMatrix& m, const char* who) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol)
    throw ContractError(std::string(who) +
                        ": input is not Hermitian within tolerance");
}

}  // namespace

RealVector eig_hermitian(const ComplexMatrix& m) {
  require_hermitian(m, "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();  // ascending
}

HermitianEigen eig_hermitian_full(const ComplexMatrix& m) {
  require_hermitian(m, "eig_hermitian_full");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector singular_values(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m);
  return svd.singularValues();  // descending
}

double nuclear_norm(const RealMatrix& m) { return singular_values(m).sum(); }

ScalarMax golden_section_max(const std::function<double(double)>& f, double lo,
                             double hi, double tol) {
  if (!(lo < hi))
    throw ArgumentError("golden_section_max: requires lo < hi");
  if (!(tol > 0.0))
    throw ArgumentError("golden_section_max: requires tol > 0");

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
  const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...

  double a = lo, b = hi;
  double c = a + invphi2 * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = a + invphi2 * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = (fc > fd) ? c : d;
  return {x, f(x)};
}

}  // namespace lurkit
