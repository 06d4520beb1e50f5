#include "lurkit/states.hpp"

#include <cmath>
#include <random>

namespace lurkit {

namespace {

// idx(+1) = 0, idx(0) = 1, idx(-1) = 2; side-1 label is the major index.
int label_index(int m) { return 1 - m; }

Eigen::VectorXcd product_ket(int m1, int m2) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
  v(3 * label_index(m1) + label_index(m2)) = 1.0;
  return v;
}

ComplexMatrix projector(const Eigen::VectorXcd& v) {
  return v * v.adjoint();
}

}  // namespace

BipartiteState make_bound_state(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw ArgumentError("make_bound_state: a must lie in [0, 1]");

  const double w = 1.0 / (1.0 + 8.0 * a);
  ComplexMatrix rho = ComplexMatrix::Zero(9, 9);

  constexpr int kProductLabels[5][2] = {
      {-1, 0}, {-1, +1}, {0, -1}, {0, +1}, {+1, 0}};
  for (const auto& m : kProductLabels)
    rho += a * w * projector(product_ket(m[0], m[1]));

  Eigen::VectorXcd e_max = (product_ket(-1, -1) + product_ket(0, 0) +
                            product_ket(+1, +1)) /
                           std::sqrt(3.0);
  rho += 3.0 * a * w * projector(e_max);

  Eigen::VectorXcd pi = std::sqrt((1.0 + a) / 2.0) * product_ket(+1, -1) +
                        std::sqrt((1.0 - a) / 2.0) * product_ket(+1, +1);
  rho += w * projector(pi);

  return {rho};
}

BipartiteState mix_with_white_noise(const BipartiteState& state,
                                    double p_noise) {
  if (!(p_noise >= 0.0 && p_noise < 1.0))
    throw ArgumentError("mix_with_white_noise: p_noise must lie in [0, 1)");
  ComplexMatrix rho = p_noise * ComplexMatrix::Identity(9, 9) / 9.0 +
                      (1.0 - p_noise) * state.rho;
  return {rho};
}

BipartiteState make_state(const StateParams& params) {
  return mix_with_white_noise(make_bound_state(params.a), params.p_noise);
}

BipartiteState sample_separable(std::uint64_t seed, int components) {
  if (components < 1 || components > 9)
    throw ArgumentError("sample_separable: components must lie in [1, 9]");

  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  auto haar_pure_projector = [&]() {
    Eigen::Vector3cd v;
    for (int i = 0; i < 3; ++i) v(i) = Complex(gauss(gen), gauss(gen));
    v.normalize();
    return ComplexMatrix(v * v.adjoint());
  };

  // Flat-simplex weights: normalized unit exponentials.
  Eigen::VectorXd weights(components);
  for (int k = 0; k < components; ++k) weights(k) = expo(gen);
  weights /= weights.sum();

  ComplexMatrix rho = ComplexMatrix::Zero(9, 9);
  for (int k = 0; k < components; ++k)
    rho += weights(k) * kron(haar_pure_projector(), haar_pure_projector());
  return {rho};
}

RealVector local_bloch(const BipartiteState& state, int side,
                       const GeneratorBasis& basis) {
  const ComplexMatrix reduced = partial_trace(state.rho, side);
  RealVector bloch(8);
  for (int i = 0; i < 8; ++i)
    bloch(i) = (reduced * basis.lambdas[i]).trace().real();
  return bloch;
}

bool is_density_matrix(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m.trace().real() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= kPositivityFloor;
}

}  // namespace lurkit
