#pragma once

#include <optional>
#include <vector>

#include "folin/aircraft.hpp"

namespace folin {

/// Steady-state flight condition at prescribed airspeed and flight-path
/// angle. `residual` is the max norm of the nondimensionally scaled state
/// derivatives at the point.
struct TrimPoint {
  double V = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double F = 0.0;
  double delta_e = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool negative_thrust = false;

  FlightState state() const { return {V, gamma, theta, 0.0}; }
  ControlInput input() const { return {F, delta_e}; }
};

struct TrimGuess {
  double theta = 0.0;
  double F = 0.0;
  double delta_e = 0.0;
};

struct TrimOptions {
  double tol = 1e-9;
  int max_iterations = 60;
};

/// Damped Newton on the unknowns (theta, F, delta_e) zeroing the scaled
/// (Vdot, gammadot, qdot); q = 0 makes the thetadot equation trivial.
/// Throws std::runtime_error with the last residual on non-convergence.
/// Negative thrust solutions are flagged but returned.
TrimPoint solve_trim(const AircraftParams& p, double V, double gamma,
                     std::optional<TrimGuess> guess = std::nullopt, const TrimOptions& opts = {});

/// Warm-started continuation over an ascending velocity list. The first
/// failure aborts with the failing index in the error message.
std::vector<TrimPoint> trim_sweep(const AircraftParams& p, const std::vector<double>& V_list,
                                  double gamma, const TrimOptions& opts = {});

/// The scaled residual used by the solver, exposed for tests.
double trim_residual(const AircraftParams& p, double V, double gamma, double theta, double F,
                     double delta_e);

}  // namespace folin
