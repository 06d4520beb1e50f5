#pragma once

#include <cstdint>

#include "lurkit/numerics.hpp"
#include "lurkit/qutrit_ops.hpp"

namespace lurkit {

/// A qutrit-qutrit density matrix. Index convention: |m1; m2> lives at
/// 3*idx(m1) + idx(m2) with idx(+1) = 0, idx(0) = 1, idx(-1) = 2, i.e. the
/// side-1 label is the major index.
struct BipartiteState {
  ComplexMatrix rho;  // 9x9, Hermitian, unit trace, positive semidefinite
};

struct StateParams {
  double a = 0.0;        // family parameter, in [0, 1]
  double p_noise = 0.0;  // white-noise weight, in [0, 1)
};

/// The one-parameter bound entangled family
///   rho_a = a/(1+8a) * (five product projectors)
///         + 3a/(1+8a) * |E_max><E_max|  +  1/(1+8a) * |Pi><Pi|
/// with |E_max> = (|-1;-1> + |0;0> + |+1;+1>)/sqrt(3) and
/// |Pi> = sqrt((1+a)/2)|+1;-1> + sqrt((1-a)/2)|+1;+1>.
/// Entangled for a in (0,1) yet positive under partial transposition.
BipartiteState make_bound_state(double a);

/// p_noise * I/9 + (1 - p_noise) * state.
BipartiteState mix_with_white_noise(const BipartiteState& state,
                                    double p_noise);

/// Convenience: bound state mixed with white noise per params.
BipartiteState make_state(const StateParams& params);

/// A seeded random separable state: a flat-simplex mixture of `components`
/// products of Haar-random pure qutrit projectors. Same seed, same state.
BipartiteState sample_separable(std::uint64_t seed, int components);

/// Generator expectation values <lambda_i> of the reduced state on `side`.
RealVector local_bloch(const BipartiteState& state, int side,
                       const GeneratorBasis& basis);

/// True when m is Hermitian, unit-trace and PSD within the shared floors.
bool is_density_matrix(const ComplexMatrix& m, double tol = kHermitianTol);

}  // namespace lurkit
