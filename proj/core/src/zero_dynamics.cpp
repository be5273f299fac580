#include "folin/zero_dynamics.hpp"

#include <cmath>

namespace folin {

Eigen::Vector2d zero_dynamics_rhs(const AircraftParams& p, const ReferenceSignal& ref,
                                  const Eigen::Vector2d& eta) {
  const double Vb = ref.V_bar;
  if (!(std::abs(eta(0)) < Vb)) {
    throw std::domain_error("zero_dynamics_rhs: |eta1| must be below Vbar");
  }
  const double beta = std::asin(eta(0) / Vb);
  const double kq = p.rho_air * Vb * p.S / (2.0 * p.m);
  const double root = std::sqrt(Vb * Vb - eta(0) * eta(0));

  Eigen::Vector2d d;
  d(0) = eta(0) * (-kq * (p.C_D0 + p.C_Dalpha * beta) - p.g * std::sin(ref.gamma_bar) / Vb -
                   ref.V_bar_dot / Vb) +
         root * (-kq * (p.C_L0 + p.C_Lalpha * beta) + p.g * std::cos(ref.gamma_bar) / Vb +
                 ref.gamma_bar_dot - eta(1));

  const double km = p.rho_air * Vb * p.S * p.cbar / (2.0 * p.I_yy);
  d(1) = km * (p.C_mdelta_e / p.C_Ldelta_e) * (p.C_L0 + p.C_Lalpha * beta) -
         p.m * p.g * p.cbar * p.C_mdelta_e * std::cos(ref.gamma_bar) /
             (p.I_yy * Vb * p.C_Ldelta_e) -
         p.m * p.cbar * p.C_mdelta_e * ref.gamma_bar_dot / (p.I_yy * p.C_Ldelta_e) -
         km * (p.C_m0 + p.C_malpha * beta);
  return d;
}

Eigen::Vector2d zero_dynamics_equilibrium(const AircraftParams& p, const ReferenceSignal& ref) {
  const double Vb = ref.V_bar;
  // eta2dot = 0 is linear in beta = asin(eta1/Vbar).
  const double lift_need = 2.0 * p.m * p.g * std::cos(ref.gamma_bar) / (p.rho_air * Vb * Vb * p.S);
  const double rate_term =
      2.0 * p.m * ref.gamma_bar_dot / (p.rho_air * Vb * p.S);
  const double num =
      p.C_m0 + (p.C_mdelta_e / p.C_Ldelta_e) * (lift_need + rate_term - p.C_L0);
  const double den = p.C_mdelta_e * p.C_Lalpha / p.C_Ldelta_e - p.C_malpha;
  if (den == 0.0) {
    throw std::domain_error("zero_dynamics_equilibrium: degenerate coefficient combination");
  }
  const double beta = num / den;
  if (!(std::abs(beta) < M_PI / 2.0)) {
    throw std::domain_error("zero_dynamics_equilibrium: equilibrium angle outside arcsin range");
  }

  Eigen::Vector2d eta;
  eta(0) = Vb * std::sin(beta);
  // eta1dot = 0 then fixes eta2.
  const double kq = p.rho_air * Vb * p.S / (2.0 * p.m);
  const double root = std::sqrt(Vb * Vb - eta(0) * eta(0));
  const double drift = -kq * (p.C_D0 + p.C_Dalpha * beta) - p.g * std::sin(ref.gamma_bar) / Vb -
                       ref.V_bar_dot / Vb;
  eta(1) = -kq * (p.C_L0 + p.C_Lalpha * beta) + p.g * std::cos(ref.gamma_bar) / Vb +
           ref.gamma_bar_dot + eta(0) * drift / root;
  return eta;
}

Eigen::Matrix2d zero_dynamics_jacobian(const AircraftParams& p, const ReferenceSignal& ref,
                                       const Eigen::Vector2d& eta) {
  const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  Eigen::Matrix2d J;
  for (int j = 0; j < 2; ++j) {
    const double h = h0 * std::max(1.0, std::abs(eta(j)));
    Eigen::Vector2d ep = eta, em = eta;
    ep(j) += h;
    em(j) -= h;
    J.col(j) = (zero_dynamics_rhs(p, ref, ep) - zero_dynamics_rhs(p, ref, em)) / (ep(j) - em(j));
  }
  return J;
}

}  // namespace folin
