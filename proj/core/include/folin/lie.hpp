#pragma once

#include "folin/affine.hpp"

namespace folin {

struct LieOptions {
  /// Central differences beyond this many stacked numeric layers lose too
  /// many digits; orders above the cap need analytic inner gradients.
  int max_fd_nesting = 2;
};

/// Central-difference gradient with step cbrt(machine eps) * max(1, |x_i|).
Vec finite_difference_gradient(const std::function<double(const Vec&)>& fn, const Vec& x);

/// Gradient of a field: analytic when available, finite differences otherwise.
/// Enforces the nesting cap when differencing a field that is itself numeric.
Vec field_gradient(const ScalarField& field, const Vec& x, const LieOptions& opts = {});

/// L_f zeta(x) = grad zeta(x) . f(x)
double lie_f(const AffineSystem& sys, const ScalarField& field, const Vec& x,
             const LieOptions& opts = {});

/// L_g zeta(x) = grad zeta(x) . g(x), one entry per input channel.
RowVec lie_g(const AffineSystem& sys, const ScalarField& field, const Vec& x,
             const LieOptions& opts = {});

/// The field x -> L_f zeta(x), reusable for further differentiation.
ScalarField lie_f_field(const AffineSystem& sys, const ScalarField& field,
                        const LieOptions& opts = {});

/// L_f^k zeta as a field (k = 0 returns the field itself).
ScalarField iterated_lie_f_field(const AffineSystem& sys, const ScalarField& field, int order,
                                 const LieOptions& opts = {});

/// L_f^k zeta(x).
double iterated_lie_f(const AffineSystem& sys, const ScalarField& field, int order, const Vec& x,
                      const LieOptions& opts = {});

}  // namespace folin
