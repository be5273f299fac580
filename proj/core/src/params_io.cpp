#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "folin/aircraft.hpp"

namespace folin {

namespace {

const std::set<std::string> kKnownKeys = {
    "m",    "g",        "rho_air",    "S",    "cbar",     "I_yy", "C_L0",
    "C_Lalpha", "C_Ldelta_e", "C_D0", "C_Dalpha", "C_m0", "C_malpha", "C_mdelta_e"};

double require_number(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw std::invalid_argument("aircraft config: missing key '" + key + "'");
  }
  if (!j.at(key).is_number()) {
    throw std::invalid_argument("aircraft config: key '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace

AircraftParams parse_aircraft_params(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("aircraft config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("aircraft config: top level must be an object");
  }
  for (const auto& item : j.items()) {
    if (kKnownKeys.find(item.key()) == kKnownKeys.end()) {
      throw std::invalid_argument("aircraft config: unknown key '" + item.key() + "'");
    }
  }
  AircraftParams p;
  p.m = require_number(j, "m");
  p.g = require_number(j, "g");
  p.rho_air = require_number(j, "rho_air");
  p.S = require_number(j, "S");
  p.cbar = require_number(j, "cbar");
  p.I_yy = require_number(j, "I_yy");
  p.C_L0 = require_number(j, "C_L0");
  p.C_Lalpha = require_number(j, "C_Lalpha");
  p.C_Ldelta_e = require_number(j, "C_Ldelta_e");
  p.C_D0 = require_number(j, "C_D0");
  p.C_Dalpha = require_number(j, "C_Dalpha");
  p.C_m0 = require_number(j, "C_m0");
  p.C_malpha = require_number(j, "C_malpha");
  p.C_mdelta_e = require_number(j, "C_mdelta_e");
  p.validate();
  return p;
}

AircraftParams load_aircraft_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("aircraft config: cannot open '" + path + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_aircraft_params(text);
}

}  // namespace folin
