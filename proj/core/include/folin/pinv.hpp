#pragma once

#include <Eigen/Dense>

namespace folin {

inline constexpr double kDefaultPinvTol = 1e-12;

/// SVD-based Moore-Penrose pseudo-inverse. Singular values below
/// rel_tol * sigma_max are treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m, double rel_tol = kDefaultPinvTol);

/// Numerical rank under the same relative cutoff.
int pinv_rank(const Eigen::MatrixXd& m, double rel_tol = kDefaultPinvTol);

}  // namespace folin
