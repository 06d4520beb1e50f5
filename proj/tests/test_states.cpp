#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lurkit/states.hpp"
#include "lurkit/witnesses.hpp"
#include "test_support.hpp"

using namespace lurkit;
using namespace lurkit::testing;

TEST_CASE("bound state is a density matrix across the whole family") {
  for (int i = 0; i <= 100; ++i) {
    const BipartiteState state = make_bound_state(i / 100.0);
    CHECK(std::abs(state.rho.trace().real() - 1.0) < 1e-14);
    CHECK(max_abs(state.rho - state.rho.adjoint()) < 1e-14);
    CHECK(eig_hermitian(state.rho).minCoeff() >= -1e-12);
  }
  CHECK_THROWS_AS(make_bound_state(-0.1), ArgumentError);
  CHECK_THROWS_AS(make_bound_state(1.1), ArgumentError);
}

TEST_CASE("bound state at a = 0 is the pure product projector") {
  const BipartiteState state = make_bound_state(0.0);
  // |Pi> = (|+1;-1> + |+1;+1>)/sqrt(2) at indices 2 and 0
  Eigen::VectorXcd pi = Eigen::VectorXcd::Zero(9);
  pi(0) = pi(2) = 1.0 / std::sqrt(2.0);
  CHECK(max_abs(state.rho - pi * pi.adjoint()) < 1e-15);

  const double purity = (state.rho * state.rho).trace().real();
  CHECK(std::abs(purity - 1.0) < 1e-14);
  const ComplexMatrix reduced1 = partial_trace(state.rho, 1);
  CHECK(std::abs((reduced1 * reduced1).trace().real() - 1.0) < 1e-14);
}

TEST_CASE("bound state at a = 0.5 matches the hand-expanded matrix") {
  const BipartiteState state = make_bound_state(0.5);
  // weights: w = 1/5, five product projectors at a*w = 0.1 on indices
  // {7, 6, 5, 3, 1}; E_max spreads 0.1 over the {0,4,8} block; Pi puts
  // 0.15 on index 2, 0.05 on index 0 and the cross coherence 0.25*sqrt(3)/5.
  ComplexMatrix expected = ComplexMatrix::Zero(9, 9);
  for (int idx : {7, 6, 5, 3, 1}) expected(idx, idx) = 0.1;
  for (int r : {0, 4, 8})
    for (int c : {0, 4, 8}) expected(r, c) += 0.1;
  expected(2, 2) += 0.2 * 0.75;
  expected(0, 0) += 0.2 * 0.25;
  const double coh = 0.2 * std::sqrt(0.75 * 0.25);
  expected(0, 2) += coh;
  expected(2, 0) += coh;
  CHECK(max_abs(state.rho - expected) < 1e-15);
  CHECK(std::abs(state.rho(4, 4).real() - 0.1) < 1e-15);
}

TEST_CASE("white noise mixing is linear and keeps the trace") {
  const BipartiteState state = make_bound_state(0.4);
  CHECK(max_abs(mix_with_white_noise(state, 0.0).rho - state.rho) == 0.0);

  const BipartiteState near_flat = mix_with_white_noise(state, 0.999);
  CHECK(max_abs(near_flat.rho - ComplexMatrix::Identity(9, 9) / 9.0) < 2e-3);
  CHECK(std::abs(near_flat.rho.trace().real() - 1.0) < 1e-14);

  const GeneratorBasis basis = make_canonical_basis();
  const double p = 0.37;
  const BipartiteState mixed = mix_with_white_noise(state, p);
  for (int side : {1, 2}) {
    const RealVector before = local_bloch(state, side, basis);
    const RealVector after = local_bloch(mixed, side, basis);
    CHECK((after - (1.0 - p) * before).cwiseAbs().maxCoeff() < 1e-14);
  }

  CHECK_THROWS_AS(mix_with_white_noise(state, -0.1), ArgumentError);
  CHECK_THROWS_AS(mix_with_white_noise(state, 1.0), ArgumentError);
}

TEST_CASE("separable sampler is seed-deterministic and positive") {
  const BipartiteState a = sample_separable(1234, 5);
  const BipartiteState b = sample_separable(1234, 5);
  CHECK(max_abs(a.rho - b.rho) == 0.0);
  const BipartiteState c = sample_separable(1235, 5);
  CHECK(max_abs(a.rho - c.rho) > 1e-3);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BipartiteState s = sample_separable(seed, 1 + int(seed % 9));
    CHECK(std::abs(s.rho.trace().real() - 1.0) < 1e-13);
    CHECK(eig_hermitian(s.rho).minCoeff() >= -1e-12);
    // separable implies positive partial transpose
    CHECK(eig_hermitian(partial_transpose_b(s.rho)).minCoeff() >= -1e-12);
  }

  CHECK_THROWS_AS(sample_separable(1, 0), ArgumentError);
  CHECK_THROWS_AS(sample_separable(1, 10), ArgumentError);
}

TEST_CASE("single-component samples are pure products") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const BipartiteState s = sample_separable(seed, 1);
    for (int side : {1, 2}) {
      const ComplexMatrix reduced = partial_trace(s.rho, side);
      CHECK(std::abs((reduced * reduced).trace().real() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("local bloch vectors behave as expected") {
  const GeneratorBasis basis = make_canonical_basis();

  BipartiteState flat{ComplexMatrix::Identity(9, 9) / 9.0};
  CHECK(local_bloch(flat, 1, basis).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(local_bloch(flat, 2, basis).cwiseAbs().maxCoeff() < 1e-14);

  std::mt19937_64 gen(43);
  for (int k = 0; k < 50; ++k) {
    BipartiteState pure_product{
        kron(random_pure_density(gen, 3), random_pure_density(gen, 3))};
    for (int side : {1, 2}) {
      const RealVector bloch = local_bloch(pure_product, side, basis);
      CHECK(std::abs(bloch.squaredNorm() - 4.0 / 3.0) < 1e-12);
    }
  }

  // at a = 0 side 1 reduces to |+1><+1|: l_z component 1, G_z component
  // 1/sqrt(3), everything else zero
  const RealVector bloch = local_bloch(make_bound_state(0.0), 1, basis);
  CHECK(std::abs(bloch(5) - 1.0) < 1e-14);
  CHECK(std::abs(bloch(7) - 1.0 / std::sqrt(3.0)) < 1e-14);
  for (int i : {0, 1, 2, 3, 4, 6}) CHECK(std::abs(bloch(i)) < 1e-14);
}

TEST_CASE("purity identity holds for both reduced states of the family") {
  const GeneratorBasis basis = make_canonical_basis();
  for (int i = 0; i <= 100; ++i) {
    const BipartiteState state = make_bound_state(i / 100.0);
    for (int side : {1, 2}) {
      const ComplexMatrix reduced = partial_trace(state.rho, side);
      const double purity = (reduced * reduced).trace().real();
      const double len_sq = local_bloch(state, side, basis).squaredNorm();
      CHECK(std::abs(purity - (1.0 / 3.0 + 0.5 * len_sq)) < 1e-12);
    }
  }
}

TEST_CASE("density matrix validator accepts states and rejects junk") {
  CHECK(is_density_matrix(ComplexMatrix::Identity(3, 3) / 3.0));
  CHECK(is_density_matrix(make_bound_state(0.3).rho));
  CHECK_FALSE(is_density_matrix(ComplexMatrix::Identity(3, 3)));  // trace 3
  ComplexMatrix sketchy = ComplexMatrix::Identity(3, 3) / 3.0;
  sketchy(0, 1) = Complex(0.0, 1e-3);
  CHECK_FALSE(is_density_matrix(sketchy));
  ComplexMatrix negative = ComplexMatrix::Zero(3, 3);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK_FALSE(is_density_matrix(negative));
}
