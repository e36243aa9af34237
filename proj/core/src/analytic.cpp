#include "hetcorr/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace hetcorr {

void AnalyticConfig::validate() const {
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("bandwidth B must be > 0");
  }
  if (n_cl < 0.0) {
    throw std::invalid_argument("classical noise N_cl must be >= 0");
  }
  if (sq.r < 0.0) {
    throw std::invalid_argument("squeeze parameter r must be >= 0");
  }
  if (beta_s < 0.0) {
    throw std::invalid_argument("signal amplitude beta_s must be >= 0");
  }
}

double direct_csd(double s_f, double gamma, double r_bs, double t_bs) {
  if (std::abs(r_bs * r_bs + t_bs * t_bs - 1.0) > 1e-9) {
    throw std::invalid_argument("beamsplitter must satisfy r^2 + t^2 = 1");
  }
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("attenuation gamma must lie in [0,1]");
  }
  if (s_f < 0.0) {
    throw std::invalid_argument("signal PSD S_f must be >= 0");
  }
  return r_bs * t_bs * gamma * gamma * (s_f - 1.0);
}

double direct_csd_unsimplified(double s_f, double gamma, double r_bs,
                               double t_bs, double s_s, double s_v) {
  if (std::abs(r_bs * r_bs + t_bs * t_bs - 1.0) > 1e-9) {
    throw std::invalid_argument("beamsplitter must satisfy r^2 + t^2 = 1");
  }
  const double g2 = gamma * gamma;
  return r_bs * t_bs * (g2 * s_f + (1.0 - g2) * s_s - s_v);
}

double band_shape(double r, double theta_l, double omega, double omega_l) {
  return std::sinh(r) * (std::abs(omega_l + omega) + std::abs(omega_l - omega)) +
         2.0 * std::cos(2.0 * theta_l) * std::cosh(r) *
             std::sqrt(omega_l * omega_l - omega * omega);
}

double csd_full_band(const AnalyticConfig& cfg, double omega) {
  cfg.validate();
  const double wl = cfg.lo.angular_frequency;
  if (omega < 0.0 || omega >= wl) {
    throw std::invalid_argument("require 0 <= omega < omega_l");
  }
  return std::sinh(cfg.sq.r) *
         band_shape(cfg.sq.r, cfg.lo.phase, omega, wl) / (4.0 * wl);
}

double csd_narrowband(double r, double theta_l) {
  const double c = std::cos(theta_l);
  const double s = std::sin(theta_l);
  return 0.25 * (std::exp(2.0 * r) * c * c + std::exp(-2.0 * r) * s * s - 1.0);
}

double csd_narrowband(const AnalyticConfig& cfg) {
  return csd_narrowband(cfg.sq.r, cfg.lo.phase);
}

ConventionalNoise conventional_noise(double r, double theta_l) {
  const double c = std::cos(theta_l);
  const double s = std::sin(theta_l);
  const double v_theta =
      std::exp(2.0 * r) * c * c + std::exp(-2.0 * r) * s * s;
  return {1.0, v_theta - 1.0, v_theta};
}

ConventionalNoise conventional_noise(const AnalyticConfig& cfg) {
  return conventional_noise(cfg.sq.r, cfg.lo.phase);
}

double mean_signal(const AnalyticConfig& cfg) {
  cfg.validate();
  const double a2 = cfg.gains.beat_power_scale(cfg.lo) * cfg.beta_s * cfg.beta_s;
  const double c = std::cos(cfg.lo.phase);
  const double s = std::sin(cfg.lo.phase);
  return 0.25 * a2 *
         (c * c * std::exp(2.0 * cfg.sq.r) + s * s * std::exp(-2.0 * cfg.sq.r));
}

MeasuredOutput measured_output(const AnalyticConfig& cfg) {
  cfg.validate();
  MeasuredOutput out;
  out.signal = mean_signal(cfg);
  out.quantum_noise = csd_narrowband(cfg) * cfg.bandwidth;
  out.classical_noise = cfg.n_cl;
  out.total = out.signal + out.quantum_noise + out.classical_noise;
  return out;
}

}  // namespace hetcorr
