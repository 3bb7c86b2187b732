#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mpwave/config.hpp"
#include "mpwave/profiles.hpp"

using namespace mpwave;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("mpwave_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(MPWAVE_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

const char* kConstructArgs =
    "--override construct.dv_minus=0.15 "
    "--override construct.contact_ratio=1.1 "
    "--override construct.dv_plus=0.15";

}  // namespace

TEST_CASE("config round-trips through JSON") {
  RunConfig c;
  c.gas.gamma = 1.4;
  c.left = ThermoState{1.1, 0.2, 0.9, 0.0};
  RunConfig::Construct k;
  k.dv_minus = 0.1;
  k.contact_ratio = 1.05;
  k.dv_plus = 0.2;
  c.construct = k;
  c.perturbation.amplitude = 1e-3;
  c.grid.n = 2048;
  c.time.t_final = 42.0;
  c.output.directory = "elsewhere";

  const json j1 = config_to_json(c);
  const RunConfig c2 = config_from_json(j1);
  const json j2 = config_to_json(c2);
  CHECK(j1 == j2);
}

TEST_CASE("dotted-path overrides") {
  json j = json::object();
  apply_override(j, "gas.gamma=1.4");
  apply_override(j, "grid.n=512");
  apply_override(j, "output.directory=runs/a");
  CHECK(j["gas"]["gamma"] == 1.4);
  CHECK(j["grid"]["n"] == 512);
  CHECK(j["output"]["directory"] == "runs/a");  // non-JSON value -> string
  CHECK_THROWS_AS(apply_override(j, "no-equals-sign"),
                  std::invalid_argument);
}

TEST_CASE("config validation") {
  RunConfig c;  // no right state, no construct
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.construct = RunConfig::Construct{0.1, 1.05, 0.1};
  CHECK_NOTHROW(c.validate());
  c.time.t_final = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("shortest round-trip decimal formatting") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng) * std::pow(10.0, int(u(rng) * 20));
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("riemann subcommand writes the pattern summary") {
  const fs::path out = fresh_dir("riemann");
  const int rc =
      run_cli("riemann --out " + out.string() + " " + kConstructArgs);
  CHECK(rc == 0);
  std::ifstream in(out / "pattern.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j["delta"].get<double>() == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(j["mid_left"]["v"].get<double>() ==
        doctest::Approx(1.15).epsilon(1e-10));
}

TEST_CASE("shock-requiring end states exit with code 2") {
  const fs::path out = fresh_dir("shock");
  const int rc = run_cli(
      "riemann --out " + out.string() +
      " --override end_states.left.v=1 --override end_states.left.u=0"
      " --override end_states.left.theta=1"
      " --override end_states.right.v=1 --override end_states.right.u=-0.5"
      " --override end_states.right.theta=1");
  CHECK(rc == 2);
}

TEST_CASE("profile dump re-evaluates bit-for-bit") {
  const fs::path out = fresh_dir("profile");
  const int rc = run_cli("profile --out " + out.string() + " " +
                         kConstructArgs +
                         " --times 1.5 --override grid.n=64"
                         " --override grid.L=20");
  CHECK(rc == 0);

  // rebuild the same composite in-process
  json j = json::object();
  apply_override(j, "construct.dv_minus=0.15");
  apply_override(j, "construct.contact_ratio=1.1");
  apply_override(j, "construct.dv_plus=0.15");
  const RunConfig cfg = config_from_json(j);
  const CompositeWave w =
      build_composite(cfg.gas, make_pattern(cfg), cfg.profiles);

  std::ifstream csv(out / "profile.csv");
  REQUIRE(csv.good());
  std::string line;
  std::getline(csv, line);
  CHECK(line == "t,x,V,U,Theta,V_x,U_x,Theta_x");
  int rows = 0;
  while (std::getline(csv, line)) {
    std::stringstream ss(line);
    std::string tok;
    std::vector<std::string> toks;
    while (std::getline(ss, tok, ',')) toks.push_back(tok);
    REQUIRE(toks.size() == 8);
    const double t = std::strtod(toks[0].c_str(), nullptr);
    const double x = std::strtod(toks[1].c_str(), nullptr);
    const ProfilePoint p = w.field(t, x);
    CHECK(format_double(p.V) == toks[2]);
    CHECK(format_double(p.U) == toks[3]);
    CHECK(format_double(p.Th) == toks[4]);
    CHECK(format_double(p.Vx) == toks[5]);
    CHECK(format_double(p.Ux) == toks[6]);
    CHECK(format_double(p.Thx) == toks[7]);
    ++rows;
  }
  CHECK(rows == 64);
}

TEST_CASE("environment variable provides the default output directory") {
  const fs::path out = fresh_dir("envdir");
  setenv("MPWAVE_OUT_DIR", out.string().c_str(), 1);
  const int rc = run_cli(std::string("riemann ") + kConstructArgs);
  unsetenv("MPWAVE_OUT_DIR");
  CHECK(rc == 0);
  CHECK(fs::exists(out / "pattern.json"));
}

TEST_CASE("simulate subcommand emits norms, snapshots and a summary") {
  const fs::path out = fresh_dir("simulate");
  const int rc = run_cli("simulate --out " + out.string() + " " +
                         kConstructArgs +
                         " --override grid.n=64 --override grid.L=20"
                         " --override time.t_final=1"
                         " --override time.snapshot_cadence=0.5"
                         " --override perturbation.amplitude=0.01");
  CHECK(rc == 0);
  CHECK(fs::exists(out / "norms.csv"));
  CHECK(fs::exists(out / "snapshot_0000.csv"));
  std::ifstream in(out / "summary.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  CHECK(j["result"]["t_end"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["config"]["grid"]["n"] == 64);
  CHECK(j["result"]["min_v"].get<double>() > 0.0);
}

TEST_CASE("identical configs give byte-identical outputs") {
  const fs::path out1 = fresh_dir("det1"), out2 = fresh_dir("det2");
  const std::string args = std::string(kConstructArgs) +
                           " --times 2 --override grid.n=32"
                           " --override grid.L=15";
  CHECK(run_cli("profile --out " + out1.string() + " " + args) == 0);
  CHECK(run_cli("profile --out " + out2.string() + " " + args) == 0);
  std::ifstream a(out1 / "profile.csv"), b(out2 / "profile.csv");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}
