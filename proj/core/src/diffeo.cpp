#include "folin/diffeo.hpp"

#include <cmath>
#include <sstream>

namespace folin {

double eta2_coefficient(const AircraftParams& p) {
  return p.m * p.cbar * p.C_mdelta_e / (p.I_yy * p.C_Ldelta_e);
}

TransformedState diffeo_forward(const AircraftParams& p, const ReferenceSignal& ref,
                                const Vec& x) {
  if (x.size() != 4) {
    throw std::invalid_argument("diffeo_forward: state must have 4 entries");
  }
  TransformedState t;
  t.xi << x(0), x(1);
  t.eta(0) = std::sin(x(2) - x(1) - ref.gamma_bar) * (x(0) + ref.V_bar);
  t.eta(1) = eta2_coefficient(p) * x(1) - x(3);
  return t;
}

Vec diffeo_inverse(const AircraftParams& p, const ReferenceSignal& ref,
                   const TransformedState& t) {
  const double Vt = t.xi(0) + ref.V_bar;
  if (!(Vt > 0.0)) {
    throw std::domain_error("diffeo_inverse: xi1 + Vbar must be positive");
  }
  if (std::abs(t.eta(0)) > Vt) {
    std::ostringstream os;
    os << "diffeo_inverse: |eta1| = " << std::abs(t.eta(0)) << " exceeds xi1 + Vbar = " << Vt
       << " (arcsin domain)";
    throw std::domain_error(os.str());
  }
  Vec x(4);
  x(0) = t.xi(0);
  x(1) = t.xi(1);
  x(2) = std::asin(t.eta(0) / Vt) + t.xi(1) + ref.gamma_bar;
  x(3) = eta2_coefficient(p) * t.xi(1) - t.eta(1);
  return x;
}

ScalarField eta1_field(const AircraftParams&, const ReferenceSignal& ref) {
  ScalarField field;
  field.value = [ref](const Vec& x) {
    return std::sin(x(2) - x(1) - ref.gamma_bar) * (x(0) + ref.V_bar);
  };
  field.gradient = [ref](const Vec& x) {
    const double A = x(2) - x(1) - ref.gamma_bar;
    const double Vt = x(0) + ref.V_bar;
    Vec g(4);
    g << std::sin(A), -std::cos(A) * Vt, std::cos(A) * Vt, 0.0;
    return g;
  };
  return field;
}

ScalarField eta2_field(const AircraftParams& p, const ReferenceSignal&) {
  const double c = eta2_coefficient(p);
  ScalarField field;
  field.value = [c](const Vec& x) { return c * x(1) - x(3); };
  field.gradient = [c](const Vec& x) {
    Vec g = Vec::Zero(x.size());
    g(1) = c;
    g(3) = -1.0;
    return g;
  };
  return field;
}

}  // namespace folin
