#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>

namespace folin {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using RowVec = Eigen::RowVectorXd;

/// Smooth scalar function of the state. If `gradient` is empty the Lie
/// machinery falls back to central finite differences; `fd_depth` counts how
/// many numeric-differentiation layers already sit underneath `value`, so
/// that nested differencing can be capped.
struct ScalarField {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  int fd_depth = 0;

  bool has_analytic_gradient() const { return static_cast<bool>(gradient); }
};

/// Input-affine system xdot = f(x) + g(x) u, y = h(x).
///
/// f, g, h are pure evaluators; optional analytic Jacobians sharpen the Lie
/// derivatives (and are cross-checked against finite differences in tests).
/// `admissible` declares the region the system is meant to be probed in;
/// `near_singular` flags proximity to decoupling singularities (used by the
/// simulator for diagnostics, never as a hard failure).
struct AffineSystem {
  int state_dim = 0;
  int input_dim = 0;
  int output_dim = 0;

  std::function<Vec(const Vec&)> f;
  std::function<Mat(const Vec&)> g;
  std::function<Vec(const Vec&)> h;

  // optional analytic derivatives
  std::function<Mat(const Vec&)> f_jacobian;                 // state_dim x state_dim
  std::function<Mat(const Vec&)> h_jacobian;                 // output_dim x state_dim
  std::function<Mat(const Vec&, int)> g_column_jacobian;     // state_dim x state_dim

  std::function<bool(const Vec&)> admissible;
  std::function<bool(const Vec&)> near_singular;

  bool is_admissible(const Vec& x) const { return !admissible || admissible(x); }
  bool flags_singular(const Vec& x) const { return near_singular && near_singular(x); }

  ScalarField output_field(int i) const;

  /// Evaluates f, g, h at x and throws std::domain_error naming the offending
  /// component if anything is non-finite or mis-shaped.
  void check_finite_at(const Vec& x) const;
};

}  // namespace folin
