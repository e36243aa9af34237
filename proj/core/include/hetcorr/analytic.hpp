#pragma once

#include "hetcorr/state.hpp"

namespace hetcorr {

/// Closed-form configuration: squeezing, LO quadrature choice, signal
/// amplitude, measurement bandwidth and lumped classical noise. All returned
/// spectra are in SNU; multiply by gains.snu(lo) for physical units.
struct AnalyticConfig {
  GainConstants gains = GainConstants::desk_scale();
  SqueezeParams sq;
  LocalOscillator lo;
  double beta_s = 0.0;
  double bandwidth = 1.0;     // B, Hz, > 0
  double n_cl = 0.0;          // classical noise power, SNU*Hz, >= 0

  void validate() const;
};

/// Direct-detection CSD, r_bs t_bs gamma^2 (S_f - 1). Throws for a
/// non-unitary beamsplitter or gamma outside [0,1].
double direct_csd(double s_f, double gamma, double r_bs, double t_bs);

/// Pre-simplification form r_bs t_bs [gamma^2 S_f + (1-gamma^2) S_s - S_v];
/// equals direct_csd when S_s = S_v = 1.
double direct_csd_unsimplified(double s_f, double gamma, double r_bs,
                               double t_bs, double s_s = 1.0, double s_v = 1.0);

/// Frequency shape of the full-band CSD:
/// F(w) = sinh r (|w_l + w| + |w_l - w|) + 2 cos(2 theta_l) cosh r
///        sqrt(w_l^2 - w^2).
double band_shape(double r, double theta_l, double omega, double omega_l);

/// Full-band CSD in SNU: sinh(r) F(omega) / (4 omega_l). Requires
/// 0 <= omega < omega_l.
double csd_full_band(const AnalyticConfig& cfg, double omega);

/// Narrowband (omega << omega_l) CSD in SNU:
/// (e^{2r} cos^2 theta_l + e^{-2r} sin^2 theta_l - 1) / 4.
double csd_narrowband(double r, double theta_l);
double csd_narrowband(const AnalyticConfig& cfg);

/// Quantum noise of a conventional balanced heterodyne detector, split into
/// the shot term (1 SNU) and the squeezing-induced term (V_theta - 1 SNU).
struct ConventionalNoise {
  double shot_snu = 1.0;
  double squeeze_term_snu = 0.0;
  double total_snu = 1.0;
};
ConventionalNoise conventional_noise(double r, double theta_l);
ConventionalNoise conventional_noise(const AnalyticConfig& cfg);

/// Time-averaged cross-correlation beat signal,
/// (A^2/4)(cos^2 theta_l e^{2r} + sin^2 theta_l e^{-2r}) with
/// A^2 = (eta e c eps0 eps_l beta_s)^2.
double mean_signal(const AnalyticConfig& cfg);

/// The experimentally indistinguishable mixture of signal, CSD-induced
/// quantum noise (csd_narrowband x B) and classical noise.
struct MeasuredOutput {
  double signal = 0.0;
  double quantum_noise = 0.0;
  double classical_noise = 0.0;
  double total = 0.0;
};
MeasuredOutput measured_output(const AnalyticConfig& cfg);

}  // namespace hetcorr
