#pragma once

#include "folin/relative_degree.hpp"

namespace folin {

/// Block-diagonal integrator-chain matrices: A is rho x rho with one shift
/// block per output, B is rho x l_y with a unit tail entry per block.
struct CompanionForm {
  Mat A;
  Mat B;
  std::vector<int> block_sizes;
};

CompanionForm companion_matrices(const RelativeDegreeProfile& profile);

}  // namespace folin
