#pragma once

#include "folin/aircraft.hpp"

namespace folin {

/// Internal dynamics of the two-output plant with the outputs pinned to zero,
/// in the (eta1, eta2) coordinates of diffeo_forward. Valid for |eta1| < Vbar.
Eigen::Vector2d zero_dynamics_rhs(const AircraftParams& p, const ReferenceSignal& ref,
                                  const Eigen::Vector2d& eta);

/// The equilibrium of the internal dynamics consistent with pinned outputs
/// (closed form: the eta2 equation is linear in asin(eta1/Vbar), then the
/// eta1 equation yields eta2).
Eigen::Vector2d zero_dynamics_equilibrium(const AircraftParams& p, const ReferenceSignal& ref);

/// Central finite-difference Jacobian of the internal dynamics.
Eigen::Matrix2d zero_dynamics_jacobian(const AircraftParams& p, const ReferenceSignal& ref,
                                       const Eigen::Vector2d& eta);

}  // namespace folin
