#include <cmath>

#include "folin/aircraft.hpp"

namespace folin {

namespace {

constexpr double kMinAirspeed = 10.0;    // below this the error model is meaningless
constexpr double kCosFloorHard = 0.05;   // admissible-region bound on |cos(alpha)|
constexpr double kCosFloorFlag = 1e-3;   // diagnostic singularity flag

struct TwoOutputTerms {
  double Vt, A, cosA, sinA;
};

TwoOutputTerms terms2(const Vec& x, const ReferenceSignal& ref) {
  TwoOutputTerms t;
  t.Vt = x(0) + ref.V_bar;
  t.A = x(2) - x(1) - ref.gamma_bar;
  t.cosA = std::cos(t.A);
  t.sinA = std::sin(t.A);
  return t;
}

}  // namespace

AffineSystem build_two_output_system(const AircraftParams& p, const ReferenceSignal& ref) {
  p.validate();
  AffineSystem sys;
  sys.state_dim = 4;
  sys.input_dim = 2;
  sys.output_dim = 2;

  const double kD = p.rho_air * p.S / (2.0 * p.m);
  const double kL = p.rho_air * p.S / (2.0 * p.m);
  const double kM = p.rho_air * p.S * p.cbar / (2.0 * p.I_yy);

  sys.f = [p, ref, kD, kL, kM](const Vec& x) {
    const auto t = terms2(x, ref);
    Vec f(4);
    f(0) = -kD * t.Vt * t.Vt * (p.C_D0 + p.C_Dalpha * t.A) -
           p.g * std::sin(x(1) + ref.gamma_bar) - ref.V_bar_dot;
    f(1) = kL * t.Vt * (p.C_L0 + p.C_Lalpha * t.A) -
           p.g * std::cos(x(1) + ref.gamma_bar) / t.Vt - ref.gamma_bar_dot;
    f(2) = x(3);
    f(3) = kM * t.Vt * (p.C_m0 + p.C_malpha * t.A);
    return f;
  };

  sys.g = [p, ref, kL, kM](const Vec& x) {
    const auto t = terms2(x, ref);
    Mat g = Mat::Zero(4, 2);
    g(0, 0) = t.cosA / p.m;
    g(1, 0) = t.sinA / (p.m * t.Vt);
    g(1, 1) = kL * t.Vt * p.C_Ldelta_e;
    g(3, 1) = kM * t.Vt * p.C_mdelta_e;
    return g;
  };

  sys.h = [](const Vec& x) { return Vec(x.head(2)); };

  sys.f_jacobian = [p, ref, kD, kL, kM](const Vec& x) {
    const auto t = terms2(x, ref);
    const double sg = std::sin(x(1) + ref.gamma_bar);
    const double cg = std::cos(x(1) + ref.gamma_bar);
    Mat J = Mat::Zero(4, 4);
    J(0, 0) = -2.0 * kD * t.Vt * (p.C_D0 + p.C_Dalpha * t.A);
    J(0, 1) = kD * t.Vt * t.Vt * p.C_Dalpha - p.g * cg;
    J(0, 2) = -kD * t.Vt * t.Vt * p.C_Dalpha;
    J(1, 0) = kL * (p.C_L0 + p.C_Lalpha * t.A) + p.g * cg / (t.Vt * t.Vt);
    J(1, 1) = -kL * t.Vt * p.C_Lalpha + p.g * sg / t.Vt;
    J(1, 2) = kL * t.Vt * p.C_Lalpha;
    J(2, 3) = 1.0;
    J(3, 0) = kM * (p.C_m0 + p.C_malpha * t.A);
    J(3, 1) = -kM * t.Vt * p.C_malpha;
    J(3, 2) = kM * t.Vt * p.C_malpha;
    return J;
  };

  sys.h_jacobian = [](const Vec&) {
    Mat J = Mat::Zero(2, 4);
    J(0, 0) = 1.0;
    J(1, 1) = 1.0;
    return J;
  };

  sys.g_column_jacobian = [p, ref, kL, kM](const Vec& x, int col) {
    const auto t = terms2(x, ref);
    Mat J = Mat::Zero(4, 4);
    if (col == 0) {
      J(0, 1) = t.sinA / p.m;
      J(0, 2) = -t.sinA / p.m;
      J(1, 0) = -t.sinA / (p.m * t.Vt * t.Vt);
      J(1, 1) = -t.cosA / (p.m * t.Vt);
      J(1, 2) = t.cosA / (p.m * t.Vt);
    } else if (col == 1) {
      J(1, 0) = kL * p.C_Ldelta_e;
      J(3, 0) = kM * p.C_mdelta_e;
    } else {
      throw std::invalid_argument("g column index out of range");
    }
    return J;
  };

  sys.admissible = [ref](const Vec& x) {
    const auto t = terms2(x, ref);
    return t.Vt > kMinAirspeed && std::abs(t.cosA) > kCosFloorHard;
  };
  sys.near_singular = [ref](const Vec& x) {
    const auto t = terms2(x, ref);
    return std::abs(t.cosA) < kCosFloorFlag || t.Vt < 1.0;
  };
  return sys;
}

AffineSystem build_three_output_system(const AircraftParams& p, const ReferenceSignal& ref) {
  p.validate();
  AffineSystem sys;
  sys.state_dim = 4;
  sys.input_dim = 2;
  sys.output_dim = 3;

  const double kD = p.rho_air * p.S / (2.0 * p.m);
  const double kL = p.rho_air * p.S / (2.0 * p.m);
  const double kM = p.rho_air * p.S * p.cbar / (2.0 * p.I_yy);

  // Pitch error coordinates shift the angle of attack by theta_bar.
  auto terms3 = [ref](const Vec& x) {
    TwoOutputTerms t;
    t.Vt = x(0) + ref.V_bar;
    t.A = x(2) + ref.theta_bar - x(1) - ref.gamma_bar;
    t.cosA = std::cos(t.A);
    t.sinA = std::sin(t.A);
    return t;
  };

  sys.f = [p, ref, kD, kL, kM, terms3](const Vec& x) {
    const auto t = terms3(x);
    Vec f(4);
    f(0) = -kD * t.Vt * t.Vt * (p.C_D0 + p.C_Dalpha * t.A) -
           p.g * std::sin(x(1) + ref.gamma_bar) - ref.V_bar_dot;
    f(1) = kL * t.Vt * (p.C_L0 + p.C_Lalpha * t.A) -
           p.g * std::cos(x(1) + ref.gamma_bar) / t.Vt - ref.gamma_bar_dot;
    f(2) = x(3);
    f(3) = kM * t.Vt * t.Vt * (p.C_m0 + p.C_malpha * t.A) - ref.theta_bar_ddot;
    return f;
  };

  sys.g = [p, kL, kM, terms3](const Vec& x) {
    const auto t = terms3(x);
    Mat g = Mat::Zero(4, 2);
    g(0, 0) = t.cosA / p.m;
    g(1, 0) = t.sinA / (p.m * t.Vt);
    g(1, 1) = kL * t.Vt * p.C_Ldelta_e;
    g(3, 1) = kM * t.Vt * t.Vt * p.C_mdelta_e;
    return g;
  };

  sys.h = [](const Vec& x) { return Vec(x.head(3)); };

  sys.f_jacobian = [p, ref, kD, kL, kM, terms3](const Vec& x) {
    const auto t = terms3(x);
    const double sg = std::sin(x(1) + ref.gamma_bar);
    const double cg = std::cos(x(1) + ref.gamma_bar);
    Mat J = Mat::Zero(4, 4);
    J(0, 0) = -2.0 * kD * t.Vt * (p.C_D0 + p.C_Dalpha * t.A);
    J(0, 1) = kD * t.Vt * t.Vt * p.C_Dalpha - p.g * cg;
    J(0, 2) = -kD * t.Vt * t.Vt * p.C_Dalpha;
    J(1, 0) = kL * (p.C_L0 + p.C_Lalpha * t.A) + p.g * cg / (t.Vt * t.Vt);
    J(1, 1) = -kL * t.Vt * p.C_Lalpha + p.g * sg / t.Vt;
    J(1, 2) = kL * t.Vt * p.C_Lalpha;
    J(2, 3) = 1.0;
    J(3, 0) = 2.0 * kM * t.Vt * (p.C_m0 + p.C_malpha * t.A);
    J(3, 1) = -kM * t.Vt * t.Vt * p.C_malpha;
    J(3, 2) = kM * t.Vt * t.Vt * p.C_malpha;
    return J;
  };

  sys.h_jacobian = [](const Vec&) {
    Mat J = Mat::Zero(3, 4);
    J(0, 0) = 1.0;
    J(1, 1) = 1.0;
    J(2, 2) = 1.0;
    return J;
  };

  sys.g_column_jacobian = [p, kL, kM, terms3](const Vec& x, int col) {
    const auto t = terms3(x);
    Mat J = Mat::Zero(4, 4);
    if (col == 0) {
      J(0, 1) = t.sinA / p.m;
      J(0, 2) = -t.sinA / p.m;
      J(1, 0) = -t.sinA / (p.m * t.Vt * t.Vt);
      J(1, 1) = -t.cosA / (p.m * t.Vt);
      J(1, 2) = t.cosA / (p.m * t.Vt);
    } else if (col == 1) {
      J(1, 0) = kL * p.C_Ldelta_e;
      J(3, 0) = 2.0 * kM * t.Vt * p.C_mdelta_e;
    } else {
      throw std::invalid_argument("g column index out of range");
    }
    return J;
  };

  sys.admissible = [terms3](const Vec& x) {
    const auto t = terms3(x);
    return t.Vt > kMinAirspeed && std::abs(t.cosA) > kCosFloorHard;
  };
  sys.near_singular = [terms3](const Vec& x) {
    const auto t = terms3(x);
    return std::abs(t.cosA) < kCosFloorFlag || t.Vt < 1.0;
  };
  return sys;
}

}  // namespace folin
