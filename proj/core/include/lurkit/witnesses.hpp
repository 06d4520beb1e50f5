#pragma once

#include "lurkit/states.hpp"

namespace lurkit {

struct PptReport {
  double min_eigenvalue = 0.0;
  bool is_ppt = false;  // min_eigenvalue >= kPositivityFloor
};

/// Spectral test of the partial transpose (taken on side 2; transposing
/// side 1 instead gives the same spectrum). A negative eigenvalue certifies
/// entanglement; PPT together with a LUR violation certifies bound
/// entanglement.
PptReport ppt_check(const BipartiteState& state);

}  // namespace lurkit
