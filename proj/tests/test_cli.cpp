#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = HETCORR_CLI_PATH;

int run(const std::string& args) {
  const int rc = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

fs::path make_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hetcorr_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const json& j) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << j.dump(2);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const fs::path& p) { return json::parse(slurp(p)); }

json sim_config(double r, double theta_l, std::size_t n) {
  return json{
      {"chain", {{"r", r}, {"theta_l", theta_l}}},
      {"acquisition",
       {{"sample_rate_hz", 1.0},
        {"duration_s", static_cast<double>(n)},
        {"seed", 1234},
        {"n_segments", 60}}},
      {"estimator", {{"segment_len", 2048}}}};
}

}  // namespace

TEST_CASE("config and argument errors exit with code 2") {
  const fs::path dir = make_dir("errors");
  CHECK(run("simulate --config /nonexistent.json --out " + dir.string()) == 2);

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(run("simulate --config " + (dir / "broken.json").string()) == 2);

  // optimize without a budget block
  const fs::path no_budget = write_config(dir, json::object());
  CHECK(run("optimize --config " + no_budget.string() + " --out " +
            dir.string()) == 2);

  // invalid chain parameter
  const fs::path bad_chain =
      write_config(dir, json{{"chain", {{"r", -1.0}}}});
  CHECK(run("simulate --config " + bad_chain.string() + " --out " +
            dir.string()) == 2);

  CHECK(run("simulate") == 2);  // missing required --config
}

TEST_CASE("simulate writes calibrated outputs and is deterministic") {
  const fs::path dir1 = make_dir("sim1");
  const fs::path dir2 = make_dir("sim2");
  const fs::path cfg = write_config(dir1, sim_config(0.0, 1.5707963, 1u << 17));

  REQUIRE(run("simulate --config " + cfg.string() + " --out " +
              dir1.string()) == 0);
  const json summary = read_json(dir1 / "summary.json");
  CHECK(summary.at("predicted_snu").get<double>() == doctest::Approx(0.0));
  CHECK(std::abs(summary.at("csd_mean_snu").get<double>()) < 0.05);
  CHECK(summary.at("arm_a_psd_snu").get<double>() ==
        doctest::Approx(0.5).epsilon(0.05));
  CHECK(summary.at("seed").get<int>() == 1234);
  CHECK(summary.contains("config"));

  // same config + seed: byte-identical CSV; plots must not change the CSV
  REQUIRE(run("simulate --config " + cfg.string() + " --out " + dir2.string() +
              " --emit-plots") == 0);
  CHECK(slurp(dir1 / "spectrum.csv") == slurp(dir2 / "spectrum.csv"));
  CHECK(fs::exists(dir2 / "spectrum.svg"));
  CHECK_FALSE(fs::exists(dir1 / "spectrum.svg"));

  const std::string header = slurp(dir1 / "spectrum.csv").substr(0, 64);
  CHECK(header.rfind("freq_hz,csd_real_snu,csd_imag_snu,sigma_snu", 0) == 0);
}

TEST_CASE("simulate with squeezing predicts -0.125 SNU") {
  const fs::path dir = make_dir("sim_sq");
  const fs::path cfg =
      write_config(dir, sim_config(0.34657359, 1.5707963, 1u << 17));
  REQUIRE(run("simulate --config " + cfg.string() + " --out " +
              dir.string()) == 0);
  const json summary = read_json(dir / "summary.json");
  CHECK(summary.at("predicted_snu").get<double>() ==
        doctest::Approx(-0.125).epsilon(1e-6));
  CHECK(summary.at("csd_mean_snu").get<double>() ==
        doctest::Approx(-0.125).epsilon(0.2));
}

TEST_CASE("trajectory export carries the CSV contract") {
  const fs::path dir = make_dir("traj");
  json cfg_json = sim_config(0.1, 0.0, 1u << 14);
  cfg_json["acquisition"]["n_segments"] = 10;
  cfg_json["output"] = {{"write_trajectories", true}};
  const fs::path cfg = write_config(dir, cfg_json);
  REQUIRE(run("simulate --config " + cfg.string() + " --out " +
              dir.string()) == 0);
  const std::string traj = slurp(dir / "trajectory.csv");
  CHECK(traj.rfind("t,j_a_minus,j_b_minus", 0) == 0);
  CHECK(read_json(dir / "trajectory.csv.json").contains("config"));
}

TEST_CASE("analytic mode emits quantity rows") {
  const fs::path dir = make_dir("analytic");
  const fs::path cfg = write_config(
      dir, json{{"chain", {{"r", 0.0}, {"theta_l", 1.5707963}}}});
  REQUIRE(run("analytic --config " + cfg.string() + " --out " +
              dir.string()) == 0);
  const std::string csv = slurp(dir / "analytic.csv");
  CHECK(csv.rfind("quantity,value_snu", 0) == 0);
  CHECK(csv.find("csd_narrowband,0\n") != std::string::npos);
  CHECK(csv.find("conventional_noise_total,1\n") != std::string::npos);
}

TEST_CASE("optimize mode reports r*") {
  const fs::path dir = make_dir("optimize");
  const fs::path cfg = write_config(
      dir,
      json{{"budget", {{"n_cl_snu_hz", 0.125}, {"bandwidth_hz", 1.0}}}});
  REQUIRE(run("optimize --config " + cfg.string() + " --out " +
              dir.string()) == 0);
  const json summary = read_json(dir / "optimize.json");
  CHECK(summary.at("feasible").get<bool>());
  CHECK(summary.at("r_star").get<double>() ==
        doctest::Approx(0.34657).epsilon(1e-4));
  CHECK(std::abs(summary.at("residual").get<double>()) <= 1e-12);

  // infeasible budget still exits 0 and reports feasible = false
  const fs::path dir2 = make_dir("optimize_inf");
  const fs::path cfg2 = write_config(
      dir2, json{{"budget", {{"n_cl_snu_hz", 0.25}, {"bandwidth_hz", 1.0}}}});
  REQUIRE(run("optimize --config " + cfg2.string() + " --out " +
              dir2.string()) == 0);
  CHECK_FALSE(read_json(dir2 / "optimize.json").at("feasible").get<bool>());
}

TEST_CASE("sweep mode finds the null within one grid step") {
  const fs::path dir = make_dir("sweep");
  const fs::path cfg = write_config(
      dir, json{{"chain", {{"theta_l", 1.5707963}}},
                {"budget", {{"n_cl_snu_hz", 0.125}, {"bandwidth_hz", 1.0}}},
                {"sweep", {{"r_min", 0.0}, {"r_max", 1.0}, {"r_step", 0.01}}}});
  REQUIRE(run("sweep --config " + cfg.string() + " --out " + dir.string() +
              " --emit-plots") == 0);
  const json summary = read_json(dir / "sweep.json");
  CHECK(summary.at("argmin_r").get<double>() ==
        doctest::Approx(0.35).epsilon(0.03));
  CHECK(slurp(dir / "sweep.csv").rfind("r,total_noise_snu_hz", 0) == 0);
  CHECK(fs::exists(dir / "sweep.svg"));
}

TEST_CASE("validate mode produces a machine-readable report") {
  const fs::path dir = make_dir("validate");
  // quick, statistically loose run: small N with relaxed tolerances
  const fs::path cfg = write_config(
      dir, json{{"validate",
                 {{"n_samples", 1u << 16},
                  {"sweep_samples", 1u << 14},
                  {"tolerance_scale", 10.0}}}});
  const int rc = run("validate --config " + cfg.string() + " --out " +
                     dir.string());
  const json report = read_json(dir / "validate.json");
  CHECK(report.contains("checks"));
  CHECK(report.at("checks").size() >= 15);
  CHECK((rc == 0 || rc == 1));
  CHECK(report.at("all_pass").get<bool>() == (rc == 0));
  for (const auto& c : report.at("checks")) {
    CHECK(c.contains("delta"));
    CHECK(c.contains("pass"));
  }
}
