#pragma once

#include <string>

#include "folin/affine.hpp"

namespace folin {

/// Longitudinal rigid-body and aerodynamic parameters, SI units.
/// The lift and moment coefficients carry elevator terms; both C_Ldelta_e and
/// C_mdelta_e must be nonzero (they divide the internal-coordinate closed
/// forms and the control laws).
struct AircraftParams {
  double m = 0.0;       // mass [kg]
  double g = 9.81;      // gravity [m/s^2]
  double rho_air = 0.0; // air density [kg/m^3]
  double S = 0.0;       // wing reference area [m^2]
  double cbar = 0.0;    // mean aerodynamic chord [m]
  double I_yy = 0.0;    // pitch inertia [kg m^2]

  double C_L0 = 0.0;
  double C_Lalpha = 0.0;   // per rad
  double C_Ldelta_e = 0.0; // per rad
  double C_D0 = 0.0;
  double C_Dalpha = 0.0;   // per rad
  double C_m0 = 0.0;
  double C_malpha = 0.0;   // per rad
  double C_mdelta_e = 0.0; // per rad

  void validate() const;
};

/// Strict JSON load: exactly the AircraftParams field names as keys, SI
/// units; unknown or missing keys are rejected.
AircraftParams load_aircraft_params(const std::string& path);
AircraftParams parse_aircraft_params(const std::string& json_text);

struct FlightState {
  double V = 0.0;      // airspeed [m/s]
  double gamma = 0.0;  // flight-path angle [rad]
  double theta = 0.0;  // pitch angle [rad]
  double q = 0.0;      // pitch rate [rad/s]

  double alpha() const { return theta - gamma; }
};

struct ControlInput {
  double F = 0.0;        // thrust [N]
  double delta_e = 0.0;  // elevator deflection [rad]
};

/// Reference trajectory constants; steps are represented by switching the
/// constants at the scenario level, so the rates default to zero.
struct ReferenceSignal {
  double V_bar = 0.0;
  double V_bar_dot = 0.0;
  double gamma_bar = 0.0;
  double gamma_bar_dot = 0.0;
  double theta_bar = 0.0;
  double theta_bar_dot = 0.0;
  double theta_bar_ddot = 0.0;
};

struct AeroCoefficients {
  double C_L = 0.0;
  double C_D = 0.0;
  double C_M = 0.0;
};

/// C_L = C_L0 + C_Lalpha*alpha + C_Ldelta_e*delta_e;
/// C_D = C_D0 + C_Dalpha*alpha;  C_M likewise with its elevator term.
AeroCoefficients aero_coefficients(const AircraftParams& p, double alpha, double delta_e);

struct Forces {
  double L = 0.0;  // lift [N]
  double D = 0.0;  // drag [N]
  double M = 0.0;  // pitch moment [N m]
};

/// Dynamic-pressure scaling: L,D = 0.5*rho*V^2*S*C, M with an extra cbar.
Forces forces_moment(const AircraftParams& p, const FlightState& s, const ControlInput& u);

/// Wind-axes longitudinal equations of motion:
///   Vdot     = (F cos(alpha) - D - m g sin(gamma)) / m
///   gammadot = (F sin(alpha) + L - m g cos(gamma)) / (m V)
///   thetadot = q
///   qdot     = M / I_yy
Eigen::Vector4d dynamics_rhs(const AircraftParams& p, const FlightState& s,
                             const ControlInput& u);

/// Hand-derived two-output feedback law (thrust and elevator) obtained by
/// inverting the 2x2 decoupling matrix symbolically, with v1 = -K1*x1 and
/// v2 = -K2*x2. Serves as an independent oracle for the generic controller.
/// x is the two-output error state (V - Vbar, gamma - gammabar, theta, q).
ControlInput closed_form_two_output_control(const AircraftParams& p, const ReferenceSignal& ref,
                                            const Vec& x, double K1, double K2);

/// Error-coordinate plants in the affine form used by the controller.
/// Two-output: state (V-Vbar, gamma-gammabar, theta, q), outputs (x1, x2);
/// the pitch acceleration row keeps the single power of (x1+Vbar) that the
/// internal-coordinate analysis (diffeo/zero dynamics) is built on.
AffineSystem build_two_output_system(const AircraftParams& p, const ReferenceSignal& ref);

/// Three-output: state (V-Vbar, gamma-gammabar, theta-thetabar, q), outputs
/// (x1, x2, x3); rows match the wind-axes dynamics exactly (quadratic
/// dynamic pressure in the pitch row).
AffineSystem build_three_output_system(const AircraftParams& p, const ReferenceSignal& ref);

}  // namespace folin
