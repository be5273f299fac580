#include "folin/relative_degree.hpp"

#include <numeric>
#include <sstream>

namespace folin {

int RelativeDegreeProfile::total() const {
  return std::accumulate(rho.begin(), rho.end(), 0);
}

void RelativeDegreeProfile::require_valid_for(const AffineSystem& sys) const {
  if (num_outputs() != sys.output_dim) {
    throw std::invalid_argument("profile has " + std::to_string(num_outputs()) +
                                " outputs, system has " + std::to_string(sys.output_dim));
  }
  for (int r : rho) {
    if (r < 1) {
      // Definition allows rho_i = 0, but the chain construction needs at
      // least one derivative; such outputs are rejected up front.
      throw std::invalid_argument("relative degree entries must be >= 1, got " +
                                  std::to_string(r));
    }
  }
  if (total() > sys.state_dim) {
    throw std::invalid_argument("total relative degree exceeds state dimension");
  }
}

std::string RelativeDegreeCheck::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " (tol " << tolerance << ")\n";
  for (const auto& e : entries) {
    if (e.ok) continue;
    os << "  output " << e.output << ", probe " << e.probe << ", L_g L_f^" << e.order
       << " h: |.| = " << e.magnitude << (e.expect_zero ? " expected ~0" : " expected nonzero")
       << "\n";
  }
  return os.str();
}

RelativeDegreeCheck verify_relative_degree(const AffineSystem& sys,
                                           const RelativeDegreeProfile& claimed,
                                           const std::vector<Vec>& probes, double tol,
                                           const LieOptions& opts) {
  if (probes.empty()) {
    throw std::invalid_argument("verify_relative_degree: probe list is empty");
  }
  claimed.require_valid_for(sys);

  RelativeDegreeCheck check;
  check.tolerance = tol;
  check.pass = true;

  for (int i = 0; i < claimed.num_outputs(); ++i) {
    ScalarField field = sys.output_field(i);
    for (int j = 0; j <= claimed.rho[i] - 1; ++j) {
      const bool expect_zero = (j < claimed.rho[i] - 1);
      for (int pi = 0; pi < static_cast<int>(probes.size()); ++pi) {
        const Vec& x = probes[pi];
        const double scale = std::max(1.0, sys.g(x).norm());
        const RowVec row = lie_g(sys, field, x, opts);
        RelativeDegreeCheck::Entry entry;
        entry.output = i;
        entry.probe = pi;
        entry.order = j;
        entry.magnitude = row.lpNorm<Eigen::Infinity>() / scale;
        entry.expect_zero = expect_zero;
        entry.ok = expect_zero ? (entry.magnitude < tol) : (entry.magnitude >= tol);
        check.pass = check.pass && entry.ok;
        check.entries.push_back(entry);
      }
      if (j < claimed.rho[i] - 1) {
        field = lie_f_field(sys, field, opts);
      }
    }
  }
  return check;
}

}  // namespace folin
