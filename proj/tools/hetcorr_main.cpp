// hetcorr: batch front-end for the cross-correlation heterodyne detector
// toolkit. Modes: simulate, analytic, sweep, optimize, validate.
// Exit codes: 0 success, 1 runtime/numerical failure, 2 configuration error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hetcorr/analytic.hpp"
#include "hetcorr/chain.hpp"
#include "hetcorr/io.hpp"
#include "hetcorr/optimizer.hpp"
#include "hetcorr/spectrum.hpp"
#include "hetcorr/svg.hpp"
#include "hetcorr/validation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> segments;
  bool emit_plots = false;
  fs::path out_dir = ".";
};

double jget(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

struct Config {
  json raw;
  hetcorr::ChainParams chain;
  hetcorr::AcquisitionParams acq;
  hetcorr::EstimatorConfig estimator;
  double band_lo = 0.0;
  double band_hi = 0.0;
  std::optional<hetcorr::NoiseBudget> budget;
  double sweep_r_min = 0.0;
  double sweep_r_max = 0.7;
  double sweep_r_step = 0.02;
  bool write_trajectories = false;
  bool emit_plots = false;
  hetcorr::ValidationOptions validation;
};

Config parse_config(const json& j, const CliOverrides& cli) {
  Config cfg;
  cfg.raw = j;

  if (j.contains("chain")) {
    const json& c = j.at("chain");
    cfg.chain.sq.r = jget(c, "r", 0.0);
    cfg.chain.sq.squeeze_phase = jget(c, "squeeze_phase", 0.0);
    cfg.chain.lo.phase = jget(c, "theta_l", std::numbers::pi / 2);
    cfg.chain.lo.amplitude = jget(c, "eps_l", 1.0);
    cfg.chain.lo.angular_frequency = jget(c, "omega_l", 1e9);
    cfg.chain.beta_s = jget(c, "beta_s", 0.0);
    cfg.chain.theta_s = jget(c, "theta_s", 0.0);
    cfg.chain.het_freq = jget(c, "het_freq", 0.0);
  } else {
    cfg.chain.lo.phase = std::numbers::pi / 2;
    cfg.chain.lo.angular_frequency = 1e9;
  }

  const json a = j.value("acquisition", json::object());
  cfg.acq.sample_rate = jget(a, "sample_rate_hz", 1.0);
  cfg.acq.duration = jget(a, "duration_s", 1048576.0);
  cfg.acq.seed = a.value("seed", std::uint64_t{1});
  cfg.acq.n_segments = a.value("n_segments", 400);
  if (cli.seed) cfg.acq.seed = *cli.seed;
  if (cli.segments) cfg.acq.n_segments = *cli.segments;

  const json e = j.value("estimator", json::object());
  cfg.estimator.segment_len = e.value("segment_len", std::size_t{4096});
  cfg.estimator.window =
      hetcorr::window_from_name(e.value("window", std::string{"hann"}));
  cfg.estimator.overlap = jget(e, "overlap", 0.5);

  const json b = j.value("band", json::object());
  cfg.band_lo = jget(b, "f_lo_hz", 0.05 * cfg.acq.sample_rate);
  cfg.band_hi = jget(b, "f_hi_hz", 0.45 * cfg.acq.sample_rate);

  if (j.contains("budget")) {
    const json& n = j.at("budget");
    hetcorr::NoiseBudget budget;
    budget.bandwidth = jget(n, "bandwidth_hz", 1.0);
    if (n.contains("n_cl_table")) {
      for (const auto& row : n.at("n_cl_table")) {
        budget.n_cl_table.emplace_back(row.at(0).get<double>(),
                                       row.at(1).get<double>());
      }
    } else {
      budget.n_cl = jget(n, "n_cl_snu_hz", 0.0);
    }
    cfg.budget = budget;
  }

  const json s = j.value("sweep", json::object());
  cfg.sweep_r_min = jget(s, "r_min", 0.0);
  cfg.sweep_r_max = jget(s, "r_max", 0.7);
  cfg.sweep_r_step = jget(s, "r_step", 0.02);

  const json o = j.value("output", json::object());
  cfg.write_trajectories = o.value("write_trajectories", false);
  cfg.emit_plots = o.value("emit_plots", false) || cli.emit_plots;

  const json v = j.value("validate", json::object());
  cfg.validation.seed = v.value("seed", cfg.acq.seed);
  cfg.validation.tolerance_scale = jget(v, "tolerance_scale", 1.0);
  cfg.validation.n_samples =
      v.value("n_samples", std::size_t{1} << 20);
  cfg.validation.sweep_samples =
      v.value("sweep_samples", std::size_t{1} << 19);
  if (cli.seed) cfg.validation.seed = *cli.seed;

  try {
    cfg.chain.validate();
    cfg.acq.validate();
    cfg.estimator.validate();
    if (cfg.budget) cfg.budget->validate();
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  }
  return cfg;
}

json resolved_config_json(const Config& cfg) {
  json out = cfg.raw;
  out["tool_version"] = hetcorr::kVersion;
  out["resolved"] = {
      {"chain",
       {{"r", cfg.chain.sq.r},
        {"squeeze_phase", cfg.chain.sq.squeeze_phase},
        {"theta_l", cfg.chain.lo.phase},
        {"eps_l", cfg.chain.lo.amplitude},
        {"omega_l", cfg.chain.lo.angular_frequency},
        {"beta_s", cfg.chain.beta_s},
        {"theta_s", cfg.chain.theta_s},
        {"het_freq", cfg.chain.het_freq}}},
      {"acquisition",
       {{"sample_rate_hz", cfg.acq.sample_rate},
        {"duration_s", cfg.acq.duration},
        {"seed", cfg.acq.seed},
        {"n_segments", cfg.acq.n_segments}}},
      {"estimator",
       {{"segment_len", cfg.estimator.segment_len},
        {"window", hetcorr::window_name(cfg.estimator.window)},
        {"overlap", cfg.estimator.overlap}}},
      {"band", {{"f_lo_hz", cfg.band_lo}, {"f_hi_hz", cfg.band_hi}}}};
  return out;
}

void write_json(const fs::path& path, const json& j) {
  hetcorr::write_text_file(path, j.dump(2) + "\n");
}

int run_simulate(const Config& cfg, const fs::path& out_dir) {
  // enough data for the requested number of overlapped Welch segments
  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(
             static_cast<double>(cfg.estimator.segment_len) *
             (1.0 - cfg.estimator.overlap))));
  const std::size_t needed =
      cfg.estimator.segment_len +
      (static_cast<std::size_t>(cfg.acq.n_segments) - 1) * hop;
  if (cfg.acq.n_samples() < needed) {
    throw ConfigError("acquisition too short for n_segments Welch segments");
  }

  const hetcorr::TrajectoryPair traj =
      hetcorr::sample_trajectories(cfg.chain, cfg.acq);
  const hetcorr::ChainStatistics stats = hetcorr::linearize_chain(cfg.chain);

  const auto est = hetcorr::estimate_csd(traj.j_a_minus, traj.j_b_minus,
                                         cfg.acq.sample_rate, cfg.estimator);
  const auto ba = hetcorr::band_average(est, cfg.band_lo, cfg.band_hi);
  const auto psd_a = hetcorr::band_average(
      hetcorr::estimate_psd(traj.j_a_minus, cfg.acq.sample_rate, cfg.estimator),
      cfg.band_lo, cfg.band_hi);
  const auto psd_b = hetcorr::band_average(
      hetcorr::estimate_psd(traj.j_b_minus, cfg.acq.sample_rate, cfg.estimator),
      cfg.band_lo, cfg.band_hi);

  const json resolved = resolved_config_json(cfg);

  hetcorr::write_text_file(out_dir / "spectrum.csv",
                           hetcorr::spectrum_csv_string(est));
  write_json(out_dir / "spectrum.csv.json",
             json{{"tool_version", hetcorr::kVersion},
                  {"n_segments", est.n_segments},
                  {"config", resolved}});

  if (cfg.write_trajectories) {
    hetcorr::write_text_file(out_dir / "trajectory.csv",
                             hetcorr::trajectory_csv_string(traj));
    write_json(out_dir / "trajectory.csv.json",
               json{{"tool_version", hetcorr::kVersion}, {"config", resolved}});
  }

  write_json(out_dir / "summary.json",
             json{{"tool_version", hetcorr::kVersion},
                  {"seed", cfg.acq.seed},
                  {"csd_mean_snu", ba.mean.real()},
                  {"csd_imag_snu", ba.mean.imag()},
                  {"sigma", ba.sigma},
                  {"predicted_snu", stats.csd_pred},
                  {"arm_psd_pred_snu", stats.arm_psd_pred},
                  {"arm_a_psd_snu", psd_a.mean.real()},
                  {"arm_b_psd_snu", psd_b.mean.real()},
                  {"band_bins", ba.n_bins},
                  {"config", resolved}});

  if (cfg.emit_plots) {
    hetcorr::SvgPlot plot("Cross spectral density", "frequency (Hz)",
                          "Re CSD (SNU)");
    std::vector<double> re(est.values.size());
    for (std::size_t k = 0; k < est.values.size(); ++k) {
      re[k] = est.values[k].real();
    }
    plot.add_series(est.freqs, re, "#1f77b4", "estimate");
    plot.add_hline(stats.csd_pred, "#d62728", "analytic");
    plot.write(out_dir / "spectrum.svg");
  }
  return 0;
}

int run_analytic(const Config& cfg, const fs::path& out_dir, const json& raw) {
  hetcorr::AnalyticConfig ac;
  ac.sq = cfg.chain.sq;
  ac.lo = cfg.chain.lo;
  ac.beta_s = cfg.chain.beta_s;
  if (cfg.budget) {
    ac.bandwidth = cfg.budget->bandwidth;
    ac.n_cl = cfg.budget->n_cl;
  }

  const json d = raw.value("direct", json::object());
  const double s_f = jget(d, "s_f", 1.0);
  const double gamma = jget(d, "gamma", 1.0);
  const double r_bs = jget(d, "r_bs", 1.0 / std::sqrt(2.0));
  const double t_bs = jget(d, "t_bs", 1.0 / std::sqrt(2.0));
  const double omega = jget(raw.value("full_band", json::object()), "omega", 0.0);

  const auto conv = hetcorr::conventional_noise(ac);
  const auto out = hetcorr::measured_output(ac);

  std::ostringstream csv;
  csv << "quantity,value_snu\n";
  const auto row = [&csv](const char* name, double v) {
    csv << name << ',' << hetcorr::format_double(v) << '\n';
  };
  row("direct_csd", hetcorr::direct_csd(s_f, gamma, r_bs, t_bs));
  row("csd_narrowband", hetcorr::csd_narrowband(ac));
  row("csd_full_band", hetcorr::csd_full_band(ac, omega));
  row("band_shape",
      hetcorr::band_shape(ac.sq.r, ac.lo.phase, omega,
                          ac.lo.angular_frequency));
  row("conventional_noise_shot", conv.shot_snu);
  row("conventional_noise_squeeze_term", conv.squeeze_term_snu);
  row("conventional_noise_total", conv.total_snu);
  row("mean_signal", hetcorr::mean_signal(ac));
  row("measured_signal", out.signal);
  row("measured_quantum_noise", out.quantum_noise);
  row("measured_classical_noise", out.classical_noise);
  row("measured_total", out.total);
  hetcorr::write_text_file(out_dir / "analytic.csv", csv.str());
  write_json(out_dir / "analytic.csv.json",
             json{{"tool_version", hetcorr::kVersion},
                  {"config", resolved_config_json(cfg)}});
  return 0;
}

int run_optimize(const Config& cfg, const fs::path& out_dir) {
  if (!cfg.budget) throw ConfigError("optimize mode requires a budget block");
  const hetcorr::NoiseBudget& budget = *cfg.budget;

  json summary{{"tool_version", hetcorr::kVersion},
               {"seed", cfg.acq.seed},
               {"config", resolved_config_json(cfg)}};
  if (budget.frequency_dependent()) {
    std::vector<double> freqs;
    for (const auto& [f, v] : budget.n_cl_table) freqs.push_back(f);
    const auto profile = hetcorr::optimal_r_profile(budget, freqs);
    std::ostringstream csv;
    csv << "freq_hz,n_cl_snu_hz,feasible,r_star\n";
    bool all_ok = true;
    for (const auto& rowv : profile) {
      all_ok = all_ok && rowv.is_feasible;
      csv << hetcorr::format_double(rowv.freq) << ','
          << hetcorr::format_double(rowv.n_cl) << ','
          << (rowv.is_feasible ? 1 : 0) << ','
          << hetcorr::format_double(rowv.r_star) << '\n';
    }
    hetcorr::write_text_file(out_dir / "r_profile.csv", csv.str());
    summary["feasible"] = all_ok;
  } else {
    const bool ok = hetcorr::feasible(budget);
    summary["feasible"] = ok;
    if (ok) {
      const double r_star = hetcorr::optimal_r(budget);
      summary["r_star"] = r_star;
      summary["residual"] =
          hetcorr::total_noise(budget, r_star, std::numbers::pi / 2);
    }
  }
  write_json(out_dir / "optimize.json", summary);
  return 0;
}

int run_sweep(const Config& cfg, const fs::path& out_dir) {
  if (!cfg.budget) throw ConfigError("sweep mode requires a budget block");
  if (!(cfg.sweep_r_step > 0.0) || !(cfg.sweep_r_max >= cfg.sweep_r_min)) {
    throw ConfigError("invalid sweep grid");
  }
  std::vector<double> grid;
  for (double r = cfg.sweep_r_min; r <= cfg.sweep_r_max + 1e-12;
       r += cfg.sweep_r_step) {
    grid.push_back(r);
  }
  const auto result =
      hetcorr::sweep_r(*cfg.budget, grid, cfg.chain.lo.phase);

  std::ostringstream csv;
  csv << "r,total_noise_snu_hz\n";
  for (const auto& rowv : result.rows) {
    csv << hetcorr::format_double(rowv.r) << ','
        << hetcorr::format_double(rowv.total) << '\n';
  }
  hetcorr::write_text_file(out_dir / "sweep.csv", csv.str());

  write_json(out_dir / "sweep.json",
             json{{"tool_version", hetcorr::kVersion},
                  {"seed", cfg.acq.seed},
                  {"argmin_r", result.rows[result.argmin].r},
                  {"argmin_total", result.rows[result.argmin].total},
                  {"config", resolved_config_json(cfg)}});

  if (cfg.emit_plots) {
    hetcorr::SvgPlot plot("Total noise vs squeeze parameter", "r",
                          "total noise (SNU*Hz)");
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& rowv : result.rows) {
      xs.push_back(rowv.r);
      ys.push_back(rowv.total);
    }
    plot.add_series(xs, ys, "#1f77b4", "total noise");
    plot.add_hline(0.0, "#7f7f7f");
    if (!cfg.budget->frequency_dependent() && hetcorr::feasible(*cfg.budget)) {
      const double r_star = hetcorr::optimal_r(*cfg.budget);
      plot.add_series({r_star, r_star},
                      {result.rows.front().total, result.rows.back().total},
                      "#d62728", "r*");
    }
    plot.write(out_dir / "sweep.svg");
  }
  return 0;
}

int run_validate(const Config& cfg, const fs::path& out_dir) {
  const auto report = hetcorr::run_acceptance(cfg.validation);
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"predicted", c.predicted},
                      {"tolerance", c.tolerance},
                      {"one_sided", c.one_sided},
                      {"delta", c.measured - c.predicted},
                      {"pass", c.pass},
                      {"detail", c.detail}});
    std::printf("[%s] %s: measured %.6g, predicted %.6g (tol %.3g)\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                c.predicted, c.tolerance);
  }
  write_json(out_dir / "validate.json",
             json{{"tool_version", hetcorr::kVersion},
                  {"seed", cfg.validation.seed},
                  {"all_pass", report.all_pass()},
                  {"checks", checks},
                  {"config", resolved_config_json(cfg)}});
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-correlation heterodyne detector noise toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  CliOverrides cli;
  std::string out_dir_str = ".";
  std::uint64_t seed_arg = 0;
  int segments_arg = 0;

  const auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* copt = sub->add_option("--config", config_path, "JSON config file");
    if (config_required) copt->required();
    sub->add_option("--seed", seed_arg, "override RNG seed")
        ->each([&](const std::string&) { cli.seed = seed_arg; });
    sub->add_option("--segments", segments_arg, "override segment count")
        ->each([&](const std::string&) { cli.segments = segments_arg; });
    sub->add_option("--out", out_dir_str, "output directory");
    sub->add_flag("--emit-plots", cli.emit_plots, "write SVG plots");
  };

  add_common(app.add_subcommand("simulate", "Monte-Carlo CSD run"), true);
  add_common(app.add_subcommand("analytic", "closed-form evaluation"), true);
  add_common(app.add_subcommand("sweep", "total noise vs r"), true);
  add_common(app.add_subcommand("optimize", "optimal squeeze parameter"), true);
  add_common(app.add_subcommand("validate", "acceptance validation run"),
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string mode = app.get_subcommands().front()->get_name();

  try {
    json raw = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config file: " + config_path);
      try {
        in >> raw;
      } catch (const json::exception& ex) {
        throw ConfigError(std::string{"config parse error: "} + ex.what());
      }
    }

    cli.out_dir = out_dir_str;
    const Config cfg = parse_config(raw, cli);
    fs::create_directories(cli.out_dir);

    if (mode == "simulate") return run_simulate(cfg, cli.out_dir);
    if (mode == "analytic") return run_analytic(cfg, cli.out_dir, raw);
    if (mode == "sweep") return run_sweep(cfg, cli.out_dir);
    if (mode == "optimize") return run_optimize(cfg, cli.out_dir);
    if (mode == "validate") return run_validate(cfg, cli.out_dir);
    throw ConfigError("unknown mode: " + mode);
  } catch (const ConfigError& ex) {
    std::cerr << "config error: " << ex.what() << '\n';
    return 2;
  } catch (const json::exception& ex) {
    std::cerr << "config error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
}
