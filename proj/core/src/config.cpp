#include "mpwave/config.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

namespace mpwave {

namespace {

json state_to_json(const ThermoState& s) {
  return json{{"v", s.v}, {"u", s.u}, {"theta", s.theta}};
}

ThermoState state_from_json(const json& j) {
  ThermoState s;
  s.v = j.at("v").get<double>();
  s.u = j.at("u").get<double>();
  s.theta = j.at("theta").get<double>();
  s.omega = j.value("omega", 0.0);
  return s;
}

}  // namespace

void RunConfig::validate() const {
  gas.validate();
  left.validate();
  if (right) right->validate();
  if (!right && !construct)
    throw std::invalid_argument(
        "config: need either end_states.right or construct");
  grid.validate();
  if (!(time.t_final > 0.0))
    throw std::invalid_argument("config: time.t_final must be > 0");
  if (!(time.safety > 0.0) || !(time.diag_cadence > 0.0))
    throw std::invalid_argument("config: time parameters must be > 0");
  if (!(profiles.tol > 0.0))
    throw std::invalid_argument("config: profiles.tol must be > 0");
  if (profiles.bvp_n < 16)
    throw std::invalid_argument("config: profiles.bvp_n too small");
  if ((grid.n & (grid.n - 1)) != 0)
    std::cerr << "warning: grid.n = " << grid.n
              << " is not a power of two\n";
}

json config_to_json(const RunConfig& c) {
  json j;
  j["gas"] = {{"R", c.gas.R},
              {"gamma", c.gas.gamma},
              {"kappa", c.gas.kappa},
              {"A", c.gas.A},
              {"B", c.gas.B}};
  j["end_states"]["left"] = state_to_json(c.left);
  if (c.right) j["end_states"]["right"] = state_to_json(*c.right);
  if (c.construct)
    j["construct"] = {{"dv_minus", c.construct->dv_minus},
                      {"contact_ratio", c.construct->contact_ratio},
                      {"dv_plus", c.construct->dv_plus}};
  j["perturbation"] = {{"amplitude", c.perturbation.amplitude},
                       {"width", c.perturbation.width},
                       {"fields",
                        {{"v", c.perturbation.in_v},
                         {"u", c.perturbation.in_u},
                         {"theta", c.perturbation.in_theta},
                         {"omega", c.perturbation.in_omega}}}};
  j["grid"] = {{"L", c.grid.L}, {"n", c.grid.n}};
  j["time"] = {{"t_final", c.time.t_final},
               {"snapshot_cadence", c.time.snapshot_cadence},
               {"diag_cadence", c.time.diag_cadence},
               {"safety", c.time.safety}};
  j["profiles"] = {{"Xi", c.profiles.Xi},
                   {"bvp_n", c.profiles.bvp_n},
                   {"tol", c.profiles.tol}};
  j["diagnostics"] = {{"alpha", c.diagnostics.alpha}};
  j["output"] = {{"directory", c.output.directory}};
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  if (j.contains("gas")) {
    const auto& g = j.at("gas");
    c.gas.R = g.value("R", c.gas.R);
    c.gas.gamma = g.value("gamma", c.gas.gamma);
    c.gas.kappa = g.value("kappa", c.gas.kappa);
    c.gas.A = g.value("A", c.gas.A);
    c.gas.B = g.value("B", c.gas.B);
  }
  if (j.contains("end_states")) {
    const auto& e = j.at("end_states");
    c.left = state_from_json(e.at("left"));
    if (e.contains("right")) c.right = state_from_json(e.at("right"));
  }
  if (j.contains("construct")) {
    const auto& k = j.at("construct");
    RunConfig::Construct cs;
    cs.dv_minus = k.value("dv_minus", 0.0);
    cs.contact_ratio = k.value("contact_ratio", 1.0);
    cs.dv_plus = k.value("dv_plus", 0.0);
    c.construct = cs;
  }
  if (j.contains("perturbation")) {
    const auto& p = j.at("perturbation");
    c.perturbation.amplitude = p.value("amplitude", 0.0);
    c.perturbation.width = p.value("width", 1.0);
    if (p.contains("fields")) {
      const auto& f = p.at("fields");
      c.perturbation.in_v = f.value("v", true);
      c.perturbation.in_u = f.value("u", true);
      c.perturbation.in_theta = f.value("theta", true);
      c.perturbation.in_omega = f.value("omega", true);
    }
  }
  if (j.contains("grid")) {
    c.grid.L = j.at("grid").value("L", c.grid.L);
    c.grid.n = j.at("grid").value("n", c.grid.n);
  }
  if (j.contains("time")) {
    const auto& t = j.at("time");
    c.time.t_final = t.value("t_final", c.time.t_final);
    c.time.snapshot_cadence = t.value("snapshot_cadence", 0.0);
    c.time.diag_cadence = t.value("diag_cadence", c.time.diag_cadence);
    c.time.safety = t.value("safety", c.time.safety);
  }
  if (j.contains("profiles")) {
    const auto& p = j.at("profiles");
    c.profiles.Xi = p.value("Xi", 0.0);
    c.profiles.bvp_n = p.value("bvp_n", c.profiles.bvp_n);
    c.profiles.tol = p.value("tol", c.profiles.tol);
  }
  if (j.contains("diagnostics"))
    c.diagnostics.alpha = j.at("diagnostics").value("alpha", 0.0);
  if (j.contains("output"))
    c.output.directory =
        j.at("output").value("directory", c.output.directory);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json j;
  in >> j;
  return config_from_json(j);
}

void apply_override(json& j, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("override must be KEY=VALUE: " + spec);
  const std::string key = spec.substr(0, eq);
  const std::string val = spec.substr(eq + 1);

  json* node = &j;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part =
        key.substr(start, dot == std::string::npos ? dot : dot - start);
    if (dot == std::string::npos) {
      json parsed = json::parse(val, nullptr, false);
      (*node)[part] = parsed.is_discarded() ? json(val) : parsed;
      break;
    }
    node = &(*node)[part];
    start = dot + 1;
  }
}

WavePattern make_pattern(const RunConfig& c) {
  if (c.construct)
    return forward_construct(c.gas, c.left, c.construct->dv_minus,
                             c.construct->contact_ratio, c.construct->dv_plus);
  EndStates end;
  end.left = c.left;
  end.right = *c.right;
  return solve_pattern(c.gas, end);
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace mpwave
