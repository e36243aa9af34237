#pragma once

#include <cstdint>
#include <vector>

#include "hetcorr/state.hpp"

namespace hetcorr {

/// Parameters fixing the linearized cross-correlation heterodyne network:
/// LO quadrature selection, input squeezing, and the deterministic beat.
struct ChainParams {
  LocalOscillator lo;
  SqueezeParams sq;
  double beta_s = 0.0;   // coherent signal amplitude, SNU-normalized, >= 0
  double theta_s = 0.0;  // signal phase, radians
  double het_freq = 0.0; // Omega = omega_s - omega_l, rad/s, << lo frequency

  void validate() const;
};

struct AcquisitionParams {
  double sample_rate = 1.0;  // Hz
  double duration = 1.0;     // s
  std::uint64_t seed = 0;
  int n_segments = 1;

  std::size_t n_samples() const;
  void validate() const;
};

/// Fluctuation statistics of the linearized network. The two differential
/// currents decompose as dJ_a = (Q + W)/2 and dJ_b = (Q - W)/2, with Q the
/// measured signal quadrature (PSD signal_var) and W the combined two-port
/// vacuum noise (PSD 1), independent of Q.
struct ChainStatistics {
  double signal_var = 1.0;    // V_theta in SNU
  double vacuum_var = 1.0;    // always 1
  double csd_pred = 0.0;      // (V_theta - 1)/4, SNU
  double arm_psd_pred = 0.5;  // (V_theta + 1)/4, SNU
};

struct TrajectoryPair {
  std::vector<double> j_a_minus;
  std::vector<double> j_b_minus;
  ChainParams params;
  AcquisitionParams acq;
};

ChainStatistics linearize_chain(const ChainParams& p);

/// Sample the two differential photocurrent fluctuation series as white
/// Gaussian trajectories with the linearized statistics. Per-sample variance
/// equals the SNU PSD (flat over [0, f_s/2]). Deterministic in acq.seed.
/// include_beat superposes the deterministic mean currents of beat_signal.
TrajectoryPair sample_trajectories(const ChainParams& p,
                                   const AcquisitionParams& acq,
                                   bool include_beat = false);

/// Deterministic detected beat S(t) = Ja(t)*Jb(t) in SNU-normalized power:
/// (beta_s^2/2) [cos(theta_l) cos(Om t - theta_s) e^r
///               - sin(theta_l) sin(Om t - theta_s) e^{-r}]^2.
double beat_signal(const ChainParams& p, double t);

/// Shot-level and signal size of a conventional balanced heterodyne detector
/// on the same input: psd = V_theta SNU, mean_signal = 4x the time-averaged
/// cross-correlation beat.
struct ConventionalReference {
  double psd = 1.0;
  double mean_signal = 0.0;
};
ConventionalReference conventional_reference(const ChainParams& p);

/// Fig. 1 direct-detection network: attenuated signal (amplitude coefficient
/// gamma, vacuum s mixed in) split on an (r_bs, t_bs) beamsplitter with
/// vacuum v on the open port.
struct DirectDetectionParams {
  double s_f = 1.0;    // signal-quadrature PSD of the original field
  double gamma = 1.0;  // amplitude attenuation in [0,1]
  double r_bs = 1.0 / 1.4142135623730951;
  double t_bs = 1.0 / 1.4142135623730951;

  void validate() const;
};

/// Quadrature trajectories of the two detector ports p, q.
std::pair<std::vector<double>, std::vector<double>> sample_direct_detection(
    const DirectDetectionParams& p, std::size_t n, std::uint64_t seed);

}  // namespace hetcorr
