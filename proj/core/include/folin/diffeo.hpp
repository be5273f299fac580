#pragma once

#include "folin/aircraft.hpp"

namespace folin {

/// Internal/external split of the two-output error state:
///   eta1 = sin(x3 - x2 - gammabar) * (x1 + Vbar)
///   eta2 = (m cbar C_mdelta_e / (I_yy C_Ldelta_e)) * x2 - x4
///   xi   = (x1, x2)
struct TransformedState {
  Eigen::Vector2d xi = Eigen::Vector2d::Zero();
  Eigen::Vector2d eta = Eigen::Vector2d::Zero();
};

/// Coefficient of x2 in eta2 (and of xi2 in the inverse map).
double eta2_coefficient(const AircraftParams& p);

TransformedState diffeo_forward(const AircraftParams& p, const ReferenceSignal& ref, const Vec& x);

/// Recovers x from (eta, xi); requires |eta1| <= xi1 + Vbar and xi1 + Vbar > 0.
Vec diffeo_inverse(const AircraftParams& p, const ReferenceSignal& ref,
                   const TransformedState& t);

/// The internal coordinates as scalar fields with analytic gradients, for
/// Lie-derivative checks against the two-output system.
ScalarField eta1_field(const AircraftParams& p, const ReferenceSignal& ref);
ScalarField eta2_field(const AircraftParams& p, const ReferenceSignal& ref);

}  // namespace folin
