#include "hetcorr/chain.hpp"

#include <cmath>
#include <stdexcept>

#include "hetcorr/rng.hpp"

namespace hetcorr {

void ChainParams::validate() const {
  if (!(lo.amplitude > 0.0)) {
    throw std::invalid_argument("LO amplitude must be > 0");
  }
  if (!(lo.angular_frequency > 0.0)) {
    throw std::invalid_argument("LO frequency must be > 0");
  }
  if (sq.r < 0.0) {
    throw std::invalid_argument("squeeze parameter r must be >= 0");
  }
  if (beta_s < 0.0) {
    throw std::invalid_argument("signal amplitude beta_s must be >= 0");
  }
  if (het_freq < 0.0 || !(het_freq < lo.angular_frequency)) {
    throw std::invalid_argument(
        "heterodyne frequency must satisfy 0 <= Omega < omega_l");
  }
}

std::size_t AcquisitionParams::n_samples() const {
  return static_cast<std::size_t>(std::llround(sample_rate * duration));
}

void AcquisitionParams::validate() const {
  if (!std::isfinite(sample_rate) || !std::isfinite(duration) ||
      sample_rate <= 0.0 || duration <= 0.0) {
    throw std::invalid_argument("sample rate and duration must be finite, > 0");
  }
  if (n_samples() == 0) {
    throw std::invalid_argument("acquisition yields zero samples");
  }
  if (n_segments < 1) {
    throw std::invalid_argument("n_segments must be >= 1");
  }
}

ChainStatistics linearize_chain(const ChainParams& p) {
  p.validate();
  const QuadratureState squeezed = apply_two_mode_squeeze(vacuum(), p.sq);
  ChainStatistics st;
  st.signal_var = quadrature_variance(squeezed, p.lo.phase);
  st.vacuum_var = 1.0;
  st.csd_pred = 0.25 * (st.signal_var - 1.0);
  st.arm_psd_pred = 0.25 * (st.signal_var + 1.0);
  return st;
}

namespace {
// stream tags for the independent Gaussian substreams
constexpr std::uint64_t kStreamSignal = 0;
constexpr std::uint64_t kStreamVacuum = 1;
constexpr std::uint64_t kStreamDirectF = 2;
constexpr std::uint64_t kStreamDirectS = 3;
constexpr std::uint64_t kStreamDirectV = 4;
}  // namespace

TrajectoryPair sample_trajectories(const ChainParams& p,
                                   const AcquisitionParams& acq,
                                   bool include_beat) {
  p.validate();
  acq.validate();
  const ChainStatistics st = linearize_chain(p);
  const std::size_t n = acq.n_samples();

  std::vector<double> q(n);
  std::vector<double> w(n);
  GaussianStream::fill(q, acq.seed, kStreamSignal);
  GaussianStream::fill(w, acq.seed, kStreamVacuum);

  const double sv = std::sqrt(st.signal_var);
  TrajectoryPair out;
  out.j_a_minus.resize(n);
  out.j_b_minus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double qi = sv * q[i];
    out.j_a_minus[i] = 0.5 * (qi + w[i]);
    out.j_b_minus[i] = 0.5 * (qi - w[i]);
  }

  if (include_beat && p.beta_s > 0.0) {
    // Both arms carry the same mean beat amplitude; their product is
    // beat_signal(t).
    const double dt = 1.0 / acq.sample_rate;
    const double amp = p.beta_s / std::sqrt(2.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) * dt;
      const double phase = p.het_freq * t - p.theta_s;
      const double bracket =
          std::cos(p.lo.phase) * std::cos(phase) * std::exp(p.sq.r) -
          std::sin(p.lo.phase) * std::sin(phase) * std::exp(-p.sq.r);
      const double mean_j = amp * bracket;
      out.j_a_minus[i] += mean_j;
      out.j_b_minus[i] += mean_j;
    }
  }

  out.params = p;
  out.acq = acq;
  return out;
}

double beat_signal(const ChainParams& p, double t) {
  const double phase = p.het_freq * t - p.theta_s;
  const double bracket = std::cos(p.lo.phase) * std::cos(phase) * std::exp(p.sq.r) -
                         std::sin(p.lo.phase) * std::sin(phase) * std::exp(-p.sq.r);
  const double a2 = p.beta_s * p.beta_s;
  return 0.5 * a2 * bracket * bracket;
}

ConventionalReference conventional_reference(const ChainParams& p) {
  const ChainStatistics st = linearize_chain(p);
  const double c = std::cos(p.lo.phase);
  const double s = std::sin(p.lo.phase);
  const double a2 = p.beta_s * p.beta_s;
  // time average of beat_signal over one period, closed form
  const double cross_mean =
      0.25 * a2 * (c * c * std::exp(2.0 * p.sq.r) + s * s * std::exp(-2.0 * p.sq.r));
  return {st.signal_var, 4.0 * cross_mean};
}

void DirectDetectionParams::validate() const {
  if (std::abs(r_bs * r_bs + t_bs * t_bs - 1.0) > 1e-9) {
    throw std::invalid_argument("beamsplitter must satisfy r^2 + t^2 = 1");
  }
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("attenuation gamma must lie in [0,1]");
  }
  if (s_f < 0.0) {
    throw std::invalid_argument("signal PSD S_f must be >= 0");
  }
}

std::pair<std::vector<double>, std::vector<double>> sample_direct_detection(
    const DirectDetectionParams& p, std::size_t n, std::uint64_t seed) {
  p.validate();
  if (n == 0) throw std::invalid_argument("need at least one sample");

  std::vector<double> f(n), s(n), v(n);
  GaussianStream::fill(f, seed, kStreamDirectF);
  GaussianStream::fill(s, seed, kStreamDirectS);
  GaussianStream::fill(v, seed, kStreamDirectV);

  const double sf = std::sqrt(p.s_f);
  const double gv = std::sqrt(1.0 - p.gamma * p.gamma);
  std::vector<double> port_p(n), port_q(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = p.gamma * sf * f[i] + gv * s[i];  // attenuated signal
    port_p[i] = p.r_bs * d + p.t_bs * v[i];
    port_q[i] = p.t_bs * d - p.r_bs * v[i];
  }
  return {std::move(port_p), std::move(port_q)};
}

}  // namespace hetcorr
