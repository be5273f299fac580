#include "folin/companion.hpp"

namespace folin {

CompanionForm companion_matrices(const RelativeDegreeProfile& profile) {
  for (int r : profile.rho) {
    if (r < 1) {
      throw std::invalid_argument("companion_matrices: unsupported profile, rho_i = " +
                                  std::to_string(r));
    }
  }
  const int total = profile.total();
  const int ny = profile.num_outputs();

  CompanionForm cf;
  cf.block_sizes = profile.rho;
  cf.A = Mat::Zero(total, total);
  cf.B = Mat::Zero(total, ny);

  int offset = 0;
  for (int i = 0; i < ny; ++i) {
    const int n = profile.rho[i];
    for (int k = 0; k + 1 < n; ++k) {
      cf.A(offset + k, offset + k + 1) = 1.0;
    }
    cf.B(offset + n - 1, i) = 1.0;
    offset += n;
  }
  return cf;
}

}  // namespace folin
