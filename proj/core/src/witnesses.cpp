#include "lurkit/witnesses.hpp"

namespace lurkit {

PptReport ppt_check(const BipartiteState& state) {
  const RealVector spectrum = eig_hermitian(partial_transpose_b(state.rho));
  PptReport report;
  report.min_eigenvalue = spectrum.minCoeff();
  report.is_ppt = report.min_eigenvalue >= kPositivityFloor;
  return report;
}

}  // namespace lurkit
