#pragma once

#include <cstdint>
#include <string>

#include "folin/controller.hpp"

namespace folin {

/// One classical fourth-order Runge-Kutta update. Throws on non-finite
/// intermediate evaluations.
template <typename Rhs>
Vec rk4_step(const Rhs& rhs, const Vec& x, double dt) {
  const Vec k1 = rhs(x);
  const Vec k2 = rhs(Vec(x + 0.5 * dt * k1));
  const Vec k3 = rhs(Vec(x + 0.5 * dt * k2));
  const Vec k4 = rhs(Vec(x + dt * k3));
  Vec next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!k1.allFinite() || !k2.allFinite() || !k3.allFinite() || !k4.allFinite() ||
      !next.allFinite()) {
    throw std::domain_error("rk4_step: non-finite intermediate value");
  }
  return next;
}

struct SimConfig {
  double dt = 1e-3;       // [s]
  double horizon = 120.0; // [s]
  std::string scenario;
  GainSet gains;
  double pinv_tol = kDefaultPinvTol;
  Vec x0;
  double singular_cos_floor = 1e-3;  // diagnostic flag threshold, not a stop

  /// dt must resolve the fastest design eigenvalue: dt * max|eig| < 0.1.
  void validate(const RelativeDegreeProfile& profile) const;
};

/// Time-indexed closed-loop log. All rows share the grid length; a run that
/// hits a non-finite state returns the partial trace with `failed` set.
struct SimTrace {
  std::vector<double> t;
  std::vector<Vec> x;        // plant state per sample
  std::vector<Vec> u;        // applied input per sample
  std::vector<Vec> v;        // outer command per sample
  std::vector<Vec> lambda_diag;
  std::vector<double> lambda_offdiag;
  std::vector<int> lambda_rank;
  std::vector<std::uint8_t> singular_flag;

  bool failed = false;
  double fail_time = 0.0;
  std::string fail_reason;

  size_t size() const { return t.size(); }
};

/// Steps the plant under u = alpha(x) + gamma^+ v with v from the
/// controller's gain law, sampling the controller once per step (zero-order
/// hold across the RK4 stages). Lambda is recomputed at every sample.
SimTrace simulate_closed_loop(const AffineSystem& sys, const LinearizingController& ctrl,
                              const SimConfig& cfg);

struct ZeroDynTrace {
  std::vector<double> t;
  std::vector<Eigen::Vector2d> eta;
  bool diverged = false;    // left the arcsin domain before the horizon
  double exit_time = 0.0;
};

/// Integrates the internal dynamics; stops early (with the divergence flag)
/// if |eta1| reaches Vbar. Requires |eta1(0)| < Vbar.
ZeroDynTrace simulate_zero_dynamics(const AircraftParams& p, const ReferenceSignal& ref,
                                    const Eigen::Vector2d& eta0, double dt, double horizon);

}  // namespace folin
