#pragma once

#include <vector>

#include "folin/lie.hpp"

namespace folin {

/// Claimed relative degree rho_i per output, plus the probe states used as
/// verification evidence.
struct RelativeDegreeProfile {
  std::vector<int> rho;
  std::vector<Vec> verified_at;

  int total() const;
  int num_outputs() const { return static_cast<int>(rho.size()); }
  void require_valid_for(const AffineSystem& sys) const;
};

struct RelativeDegreeCheck {
  struct Entry {
    int output = 0;
    int probe = 0;
    int order = 0;           // j in L_g L_f^j h_i
    double magnitude = 0.0;  // inf-norm of the row, scaled by max(1, ||g(x)||)
    bool expect_zero = false;
    bool ok = false;
  };
  bool pass = false;
  double tolerance = 0.0;
  std::vector<Entry> entries;

  std::string summary() const;
};

/// Checks L_g L_f^j h_i = 0 for j < rho_i - 1 and != 0 at j = rho_i - 1, at
/// every probe. Magnitudes are scaled by max(1, ||g(x)||_F) before comparing
/// against the dimensionless tolerance.
RelativeDegreeCheck verify_relative_degree(const AffineSystem& sys,
                                           const RelativeDegreeProfile& claimed,
                                           const std::vector<Vec>& probes, double tol,
                                           const LieOptions& opts = {});

}  // namespace folin
