#include "lurkit/qutrit_ops.hpp"

#include <cmath>

namespace lurkit {

namespace {
const Complex kI(0.0, 1.0);
}

SpinOperators make_spin_operators() {
  const double s = 1.0 / std::sqrt(2.0);
  SpinOperators out;
  out.lz = ComplexMatrix::Zero(3, 3);
  out.lz(0, 0) = 1.0;
  out.lz(2, 2) = -1.0;

  out.lx = ComplexMatrix::Zero(3, 3);
  out.lx(0, 1) = out.lx(1, 0) = s;
  out.lx(1, 2) = out.lx(2, 1) = s;

  // Standard phase convention: +i/sqrt(2) below the diagonal.
  out.ly = ComplexMatrix::Zero(3, 3);
  out.ly(0, 1) = -kI * s;
  out.ly(1, 0) = kI * s;
  out.ly(1, 2) = -kI * s;
  out.ly(2, 1) = kI * s;
  return out;
}

QuadraticOperators make_quadratics(const SpinOperators& s) {
  QuadraticOperators out;
  out.qxy = s.lx * s.ly + s.ly * s.lx;
  out.qyz = s.ly * s.lz + s.lz * s.ly;
  out.qzx = s.lz * s.lx + s.lx * s.lz;
  out.sxy = s.lx * s.lx - s.ly * s.ly;
  out.gz = std::sqrt(3.0) *
           (s.lz * s.lz - (2.0 / 3.0) * ComplexMatrix::Identity(3, 3));
  return out;
}

GeneratorBasis make_canonical_basis() {
  const SpinOperators s = make_spin_operators();
  const QuadraticOperators q = make_quadratics(s);
  GeneratorBasis basis;
  basis.lambdas = {s.lx, s.ly, q.qxy, q.qyz, q.qzx, s.lz, q.sxy, q.gz};
  basis.labels = {"l_x", "l_y", "Q_xy", "Q_yz", "Q_zx", "l_z", "S_xy", "G_z"};
  return basis;
}

AsymmetricFrame make_asymmetric_frame(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw ArgumentError("make_asymmetric_frame: a must lie in [0, 1]");

  const double t = (1.0 + 2.0 * a) / (2.0 + a);
  const double r = std::sqrt(3.0 * (1.0 - a * a)) / (2.0 + a);
  const double h = std::sqrt(3.0) / 2.0;

  AsymmetricFrame frame;
  frame.a = a;
  // Rows of the mixing matrix over (l_z, S_xy, G_z):
  //   Z    : (-1/2,          0,  sqrt(3)/2)
  //   F_xy : (r*sqrt(3)/2,   t,  r/2)
  //   F_z  : (t*sqrt(3)/2,  -r,  t/2)
  frame.mixing << -0.5, 0.0, h,
                   r * h, t, r / 2.0,
                   t * h, -r, t / 2.0;

  const SpinOperators s = make_spin_operators();
  const QuadraticOperators q = make_quadratics(s);
  const std::array<ComplexMatrix, 3> triple = {s.lz, q.sxy, q.gz};
  std::array<ComplexMatrix, 3> mixed;
  for (int i = 0; i < 3; ++i) {
    mixed[i] = ComplexMatrix::Zero(3, 3);
    for (int j = 0; j < 3; ++j) mixed[i] += frame.mixing(i, j) * triple[j];
  }
  frame.z = mixed[0];
  frame.fxy = mixed[1];
  frame.fz = mixed[2];
  return frame;
}

GeneratorBasis rotate_basis(const GeneratorBasis& basis,
                            const Eigen::Matrix<double, 8, 8>& rot) {
  const double dev =
      (rot * rot.transpose() - Eigen::Matrix<double, 8, 8>::Identity())
          .cwiseAbs()
          .maxCoeff();
  if (dev > 1e-10)
    throw ArgumentError("rotate_basis: rotation is not orthogonal");

  GeneratorBasis out;
  for (int i = 0; i < 8; ++i) {
    out.lambdas[i] = ComplexMatrix::Zero(3, 3);
    for (int j = 0; j < 8; ++j)
      out.lambdas[i] += rot(i, j) * basis.lambdas[j];
    out.labels[i] = "rot_" + std::to_string(i);
  }
  return out;
}

}  // namespace lurkit
