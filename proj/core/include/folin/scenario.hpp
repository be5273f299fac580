#pragma once

#include "folin/sim.hpp"
#include "folin/trim.hpp"

namespace folin {

enum class PlantMode { kTwoOutput, kThreeOutput };

PlantMode plant_mode_from_string(const std::string& s);
std::string to_string(PlantMode mode);

/// A speed-step experiment: trimmed flight at V0, then the references switch
/// to the V_cmd trim (pitch reference from the target trim, optionally
/// biased). Holds everything needed to run and to reconstruct absolute
/// quantities from the error state.
struct Scenario {
  AircraftParams params;
  PlantMode mode = PlantMode::kThreeOutput;
  ReferenceSignal ref;     // active (post-step) references
  TrimPoint trim_start;    // at V0
  TrimPoint trim_target;   // at V_cmd
  double pitch_bias = 0.0; // [rad] added to the pitch reference
  AffineSystem sys;
  RelativeDegreeProfile profile;
  GainSet gains;
  SimConfig cfg;

  FlightState absolute_state(const Vec& x) const;
};

struct ScenarioSpec {
  PlantMode mode = PlantMode::kThreeOutput;
  double V0 = 0.0;
  double V_cmd = 0.0;
  double gamma_ref = 0.0;
  std::vector<double> gains;  // k1..k4 in three-output mode, k1..k2 used in two-output
  double pitch_bias = 0.0;    // [rad]
  double dt = 1e-3;
  double horizon = 120.0;
  double pinv_tol = kDefaultPinvTol;
  std::string name;
};

Scenario build_scenario(const AircraftParams& p, const ScenarioSpec& spec);

SimTrace run_scenario(const Scenario& scenario);

/// Same closed loop with the pitch reference offset from the true target
/// trim pitch; the nominal run is the bias = 0 special case.
SimTrace run_incorrect_pitch_scenario(const AircraftParams& p, ScenarioSpec spec,
                                      double pitch_bias_rad);

}  // namespace folin
