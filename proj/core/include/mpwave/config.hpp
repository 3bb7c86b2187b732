// Run configuration: a nested JSON file, with dotted-path overrides and
// deterministic serialization.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mpwave/profiles.hpp"
#include "mpwave/solver.hpp"

namespace mpwave {

using json = nlohmann::ordered_json;

struct RunConfig {
  GasParams gas;

  ThermoState left;                 // end_states.left
  std::optional<ThermoState> right; // explicit right state, or
  struct Construct {                // forward construction from strengths
    double dv_minus = 0.0;
    double contact_ratio = 1.0;
    double dv_plus = 0.0;
  };
  std::optional<Construct> construct;

  PerturbationSpec perturbation;
  Grid grid;

  struct TimeOpts {
    double t_final = 10.0;
    double snapshot_cadence = 0.0;  // 0: no snapshots
    double diag_cadence = 0.5;
    double safety = 0.4;
  } time;

  ProfileOptions profiles;

  struct DiagOpts {
    double alpha = 0.0;  // 0: fit from the self-similar profile tail
  } diagnostics;

  struct OutputOpts {
    std::string directory = "out";
  } output;

  void validate() const;
};

json config_to_json(const RunConfig& c);
RunConfig config_from_json(const json& j);
RunConfig load_config(const std::string& path);

// Apply "a.b.c=value" to a JSON document (value parsed as JSON when
// possible, else taken as a string).
void apply_override(json& j, const std::string& spec);

// Middle-state pattern for the configured end states: forward-constructed
// when `construct` is present, otherwise solved from left/right.
WavePattern make_pattern(const RunConfig& c);

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace mpwave
