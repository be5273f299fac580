#include "folin/scenario.hpp"

namespace folin {

PlantMode plant_mode_from_string(const std::string& s) {
  if (s == "two-output") return PlantMode::kTwoOutput;
  if (s == "three-output") return PlantMode::kThreeOutput;
  throw std::invalid_argument("unknown mode '" + s + "' (expected two-output or three-output)");
}

std::string to_string(PlantMode mode) {
  return mode == PlantMode::kTwoOutput ? "two-output" : "three-output";
}

FlightState Scenario::absolute_state(const Vec& x) const {
  FlightState s;
  s.V = x(0) + ref.V_bar;
  s.gamma = x(1) + ref.gamma_bar;
  s.theta = mode == PlantMode::kThreeOutput ? x(2) + ref.theta_bar : x(2);
  s.q = x(3);
  return s;
}

Scenario build_scenario(const AircraftParams& p, const ScenarioSpec& spec) {
  p.validate();
  if (!(spec.V0 > 0.0) || !(spec.V_cmd > 0.0)) {
    throw std::invalid_argument("scenario: V0 and V_cmd must be positive");
  }

  Scenario sc;
  sc.params = p;
  sc.mode = spec.mode;
  sc.pitch_bias = spec.pitch_bias;
  sc.trim_start = solve_trim(p, spec.V0, spec.gamma_ref);
  sc.trim_target = solve_trim(p, spec.V_cmd, spec.gamma_ref);

  sc.ref.V_bar = spec.V_cmd;
  sc.ref.gamma_bar = spec.gamma_ref;
  sc.ref.theta_bar = sc.trim_target.theta + spec.pitch_bias;
  // pure step: all reference rates are zero after the switch instant

  if (spec.mode == PlantMode::kThreeOutput) {
    sc.sys = build_three_output_system(p, sc.ref);
    sc.profile.rho = {1, 1, 2};
    if (spec.gains.size() != 4) {
      throw std::invalid_argument("three-output mode needs gains k1..k4");
    }
    sc.gains = GainSet::from_flat(sc.profile, spec.gains);
  } else {
    sc.sys = build_two_output_system(p, sc.ref);
    sc.profile.rho = {1, 1};
    if (spec.gains.size() < 2) {
      throw std::invalid_argument("two-output mode needs gains k1, k2");
    }
    sc.gains = GainSet::from_flat(sc.profile, {spec.gains[0], spec.gains[1]});
  }

  // start on the V0 trim, expressed in the (post-step) error coordinates
  Vec x0(4);
  x0(0) = spec.V0 - sc.ref.V_bar;
  x0(1) = sc.trim_start.gamma - sc.ref.gamma_bar;
  x0(2) = spec.mode == PlantMode::kThreeOutput ? sc.trim_start.theta - sc.ref.theta_bar
                                               : sc.trim_start.theta;
  x0(3) = 0.0;

  sc.cfg.dt = spec.dt;
  sc.cfg.horizon = spec.horizon;
  sc.cfg.scenario = spec.name;
  sc.cfg.gains = sc.gains;
  sc.cfg.pinv_tol = spec.pinv_tol;
  sc.cfg.x0 = x0;
  return sc;
}

SimTrace run_scenario(const Scenario& scenario) {
  LinearizingController ctrl(scenario.sys, scenario.profile, scenario.gains,
                             scenario.cfg.pinv_tol);
  return simulate_closed_loop(scenario.sys, ctrl, scenario.cfg);
}

SimTrace run_incorrect_pitch_scenario(const AircraftParams& p, ScenarioSpec spec,
                                      double pitch_bias_rad) {
  spec.pitch_bias = pitch_bias_rad;
  return run_scenario(build_scenario(p, spec));
}

}  // namespace folin
