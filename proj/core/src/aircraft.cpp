#include "folin/aircraft.hpp"

#include <cmath>

namespace folin {

void AircraftParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("AircraftParams: ") + name +
                                  " must be strictly positive");
    }
  };
  positive(m, "m");
  positive(g, "g");
  positive(rho_air, "rho_air");
  positive(S, "S");
  positive(cbar, "cbar");
  positive(I_yy, "I_yy");
  if (C_Ldelta_e == 0.0) {
    throw std::invalid_argument("AircraftParams: C_Ldelta_e must be nonzero");
  }
  if (C_mdelta_e == 0.0) {
    throw std::invalid_argument("AircraftParams: C_mdelta_e must be nonzero");
  }
}

AeroCoefficients aero_coefficients(const AircraftParams& p, double alpha, double delta_e) {
  AeroCoefficients c;
  c.C_L = p.C_L0 + p.C_Lalpha * alpha + p.C_Ldelta_e * delta_e;
  c.C_D = p.C_D0 + p.C_Dalpha * alpha;
  c.C_M = p.C_m0 + p.C_malpha * alpha + p.C_mdelta_e * delta_e;
  return c;
}

Forces forces_moment(const AircraftParams& p, const FlightState& s, const ControlInput& u) {
  if (!(s.V > 0.0)) {
    throw std::domain_error("forces_moment: airspeed must be positive");
  }
  const AeroCoefficients c = aero_coefficients(p, s.alpha(), u.delta_e);
  const double qbar_S = 0.5 * p.rho_air * s.V * s.V * p.S;
  Forces f;
  f.L = qbar_S * c.C_L;
  f.D = qbar_S * c.C_D;
  f.M = qbar_S * p.cbar * c.C_M;
  return f;
}

Eigen::Vector4d dynamics_rhs(const AircraftParams& p, const FlightState& s,
                             const ControlInput& u) {
  if (!(s.V > 0.0)) {
    throw std::domain_error("dynamics_rhs: airspeed must be positive");
  }
  const double alpha = s.alpha();
  const Forces fm = forces_moment(p, s, u);
  Eigen::Vector4d xdot;
  xdot(0) = (u.F * std::cos(alpha) - fm.D - p.m * p.g * std::sin(s.gamma)) / p.m;
  xdot(1) = (u.F * std::sin(alpha) + fm.L - p.m * p.g * std::cos(s.gamma)) / (p.m * s.V);
  xdot(2) = s.q;
  xdot(3) = fm.M / p.I_yy;
  return xdot;
}

ControlInput closed_form_two_output_control(const AircraftParams& p, const ReferenceSignal& ref,
                                            const Vec& x, double K1, double K2) {
  if (x.size() != 4) {
    throw std::invalid_argument("closed_form_two_output_control: state must have 4 entries");
  }
  const double Vt = x(0) + ref.V_bar;
  const double A = x(2) - x(1) - ref.gamma_bar;
  const double cosA = std::cos(A);
  if (std::abs(cosA) < 1e-6) {
    throw std::domain_error("closed_form_two_output_control: cos(alpha) singularity");
  }
  if (std::abs(Vt) < 1e-9) {
    throw std::domain_error("closed_form_two_output_control: airspeed singularity (x1 = -Vbar)");
  }

  const double rho = p.rho_air;
  const double S = p.S;
  const double m = p.m;
  const double g = p.g;
  const double CD = p.C_D0 + p.C_Dalpha * A;
  const double CL = p.C_L0 + p.C_Lalpha * A;
  const double sin_g = std::sin(x(1) + ref.gamma_bar);
  const double cos_g = std::cos(x(1) + ref.gamma_bar);
  const double v1 = -K1 * x(0);

  ControlInput u;
  u.F = (rho * Vt * Vt * S * CD + 2.0 * m * g * sin_g + 2.0 * m * ref.V_bar_dot + 2.0 * m * v1) /
        (2.0 * cosA);

  const double denomV2 = rho * Vt * Vt * S * p.C_Ldelta_e;
  const double denomV1 = rho * Vt * S * p.C_Ldelta_e;
  u.delta_e = std::tan(A) * (-CD / p.C_Ldelta_e - 2.0 * m * g * sin_g / denomV2 -
                             2.0 * m * ref.V_bar_dot / denomV2 + 2.0 * m * K1 * x(0) / denomV2) -
              CL / p.C_Ldelta_e + 2.0 * m * g * cos_g / denomV2 +
              2.0 * m * ref.gamma_bar_dot / denomV1 - 2.0 * m * K2 * x(1) / denomV1;
  return u;
}

}  // namespace folin
