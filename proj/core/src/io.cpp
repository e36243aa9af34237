#include "hetcorr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hetcorr {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string trajectory_csv_string(const TrajectoryPair& traj) {
  std::ostringstream csv;
  csv << "t,j_a_minus,j_b_minus\n";
  const double dt = 1.0 / traj.acq.sample_rate;
  for (std::size_t i = 0; i < traj.j_a_minus.size(); ++i) {
    csv << format_double(static_cast<double>(i) * dt) << ','
        << format_double(traj.j_a_minus[i]) << ','
        << format_double(traj.j_b_minus[i]) << '\n';
  }
  return csv.str();
}

std::string spectrum_csv_string(const SpectrumEstimate& est) {
  std::ostringstream csv;
  csv << "freq_hz,csd_real_snu,csd_imag_snu,sigma_snu\n";
  for (std::size_t k = 0; k < est.freqs.size(); ++k) {
    csv << format_double(est.freqs[k]) << ','
        << format_double(est.values[k].real()) << ','
        << format_double(est.values[k].imag()) << ','
        << format_double(est.stat_sigma[k]) << '\n';
  }
  return csv.str();
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const TrajectoryPair& traj) {
  write_text_file(path, trajectory_csv_string(traj));

  nlohmann::json sidecar = {
      {"tool_version", kVersion},
      {"chain",
       {{"theta_l", traj.params.lo.phase},
        {"eps_l", traj.params.lo.amplitude},
        {"omega_l", traj.params.lo.angular_frequency},
        {"r", traj.params.sq.r},
        {"squeeze_phase", traj.params.sq.squeeze_phase},
        {"beta_s", traj.params.beta_s},
        {"theta_s", traj.params.theta_s},
        {"het_freq", traj.params.het_freq}}},
      {"acquisition",
       {{"sample_rate_hz", traj.acq.sample_rate},
        {"duration_s", traj.acq.duration},
        {"seed", traj.acq.seed},
        {"n_segments", traj.acq.n_segments}}}};
  write_text_file(path.string() + ".json", sidecar.dump(2) + "\n");
}

void write_spectrum_csv(const std::filesystem::path& path,
                        const SpectrumEstimate& est) {
  write_text_file(path, spectrum_csv_string(est));

  nlohmann::json sidecar = {{"tool_version", kVersion},
                            {"estimator",
                             {{"window", window_name(est.window)},
                              {"overlap", est.overlap},
                              {"n_segments", est.n_segments},
                              {"sample_rate_hz", est.sample_rate}}}};
  write_text_file(path.string() + ".json", sidecar.dump(2) + "\n");
}

}  // namespace hetcorr
