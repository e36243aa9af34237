#pragma once

#include <filesystem>
#include <string>

#include "hetcorr/chain.hpp"
#include "hetcorr/spectrum.hpp"

namespace hetcorr {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest round-trippable decimal representation; used for every CSV field
/// so outputs are byte-stable for identical inputs.
std::string format_double(double v);

std::string trajectory_csv_string(const TrajectoryPair& traj);
std::string spectrum_csv_string(const SpectrumEstimate& est);

/// CSV `t,j_a_minus,j_b_minus` plus a JSON sidecar `<path>.json` with the
/// chain and acquisition parameters.
void write_trajectory_csv(const std::filesystem::path& path,
                          const TrajectoryPair& traj);

/// CSV `freq_hz,csd_real_snu,csd_imag_snu,sigma_snu` plus a JSON sidecar
/// with the estimator configuration.
void write_spectrum_csv(const std::filesystem::path& path,
                        const SpectrumEstimate& est);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace hetcorr
