#include "folin/sim.hpp"

#include <cmath>

#include "folin/zero_dynamics.hpp"

namespace folin {

void SimConfig::validate(const RelativeDegreeProfile& profile) const {
  if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
  if (!(horizon >= dt)) throw std::invalid_argument("SimConfig: horizon must be >= dt");
  gains.require_match(profile);

  // integration guard against the chain design poles
  double max_eig = 0.0;
  for (int i = 0; i < profile.num_outputs(); ++i) {
    const int n = profile.rho[i];
    Mat chain = Mat::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) chain(k, k + 1) = 1.0;
    for (int k = 0; k < n; ++k) chain(n - 1, k) = gains.chain_gains[i][k];
    const auto eigs = chain.eigenvalues();
    for (int k = 0; k < eigs.size(); ++k) {
      max_eig = std::max(max_eig, std::abs(eigs(k)));
    }
  }
  if (dt * max_eig >= 0.1) {
    throw std::invalid_argument("SimConfig: dt too large for the design dynamics (dt*|eig| = " +
                                std::to_string(dt * max_eig) + " >= 0.1)");
  }
}

SimTrace simulate_closed_loop(const AffineSystem& sys, const LinearizingController& ctrl,
                              const SimConfig& cfg) {
  cfg.validate(ctrl.profile());
  if (cfg.x0.size() != sys.state_dim) {
    throw std::invalid_argument("simulate_closed_loop: x0 has wrong dimension");
  }

  const auto steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
  SimTrace trace;
  trace.t.reserve(steps + 1);
  trace.x.reserve(steps + 1);

  Vec x = cfg.x0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    Vec v, u;
    LambdaSnapshot lam;
    try {
      v = ctrl.command(x);
      u = ctrl.control(x, v);
      lam = ctrl.lambda(x, t);
    } catch (const std::exception& e) {
      trace.failed = true;
      trace.fail_time = t;
      trace.fail_reason = e.what();
      return trace;
    }

    trace.t.push_back(t);
    trace.x.push_back(x);
    trace.u.push_back(u);
    trace.v.push_back(v);
    trace.lambda_diag.push_back(lam.diagonal);
    trace.lambda_offdiag.push_back(lam.offdiag_norm);
    trace.lambda_rank.push_back(lam.rank);
    trace.singular_flag.push_back(sys.flags_singular(x) ? 1 : 0);

    if (k == steps) break;

    // controller sampled at the step; input held across the RK4 stages
    auto rhs = [&sys, &u](const Vec& state) { return Vec(sys.f(state) + sys.g(state) * u); };
    try {
      x = rk4_step(rhs, x, cfg.dt);
    } catch (const std::exception& e) {
      trace.failed = true;
      trace.fail_time = t + cfg.dt;
      trace.fail_reason = e.what();
      return trace;
    }
    if (!x.allFinite()) {
      trace.failed = true;
      trace.fail_time = t + cfg.dt;
      trace.fail_reason = "non-finite state";
      return trace;
    }
  }
  return trace;
}

ZeroDynTrace simulate_zero_dynamics(const AircraftParams& p, const ReferenceSignal& ref,
                                    const Eigen::Vector2d& eta0, double dt, double horizon) {
  if (!(std::abs(eta0(0)) < ref.V_bar)) {
    throw std::invalid_argument("simulate_zero_dynamics: |eta1(0)| must be below Vbar");
  }
  if (!(dt > 0.0) || !(horizon >= dt)) {
    throw std::invalid_argument("simulate_zero_dynamics: bad dt/horizon");
  }

  const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
  ZeroDynTrace trace;
  trace.t.reserve(steps + 1);
  trace.eta.reserve(steps + 1);

  Eigen::Vector2d eta = eta0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    trace.t.push_back(t);
    trace.eta.push_back(eta);
    if (k == steps) break;

    auto rhs = [&p, &ref](const Vec& e) {
      return Vec(zero_dynamics_rhs(p, ref, Eigen::Vector2d(e)));
    };
    try {
      eta = rk4_step(rhs, Vec(eta), dt);
    } catch (const std::exception&) {
      // leaving the arcsin domain is the expected divergence evidence
      trace.diverged = true;
      trace.exit_time = t + dt;
      return trace;
    }
    if (!(std::abs(eta(0)) < ref.V_bar)) {
      trace.diverged = true;
      trace.exit_time = t + dt;
      return trace;
    }
  }
  return trace;
}

}  // namespace folin
