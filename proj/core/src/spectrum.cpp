#include "hetcorr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hetcorr {

std::string window_name(Window w) {
  return w == Window::hann ? "hann" : "rectangular";
}

Window window_from_name(const std::string& name) {
  if (name == "hann") return Window::hann;
  if (name == "rectangular" || name == "rect") return Window::rectangular;
  throw std::invalid_argument("unknown window: " + name);
}

void EstimatorConfig::validate() const {
  if (segment_len < 8 || !detail::is_pow2(segment_len)) {
    throw std::invalid_argument("segment_len must be a power of two >= 8");
  }
  if (!(overlap >= 0.0) || overlap >= 1.0) {
    throw std::invalid_argument("overlap must lie in [0, 1)");
  }
}

namespace detail {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_pow2(std::span<std::complex<double>> data) {
  const std::size_t n = data.size();
  if (!is_pow2(n)) throw std::invalid_argument("FFT size must be a power of two");

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen{std::cos(ang), std::sin(ang)};
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = data[i + k];
        const std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace detail

namespace {

std::vector<double> make_window(Window w, std::size_t n) {
  std::vector<double> win(n, 1.0);
  if (w == Window::hann) {
    for (std::size_t i = 0; i < n; ++i) {
      win[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                     static_cast<double>(i) /
                                     static_cast<double>(n)));
    }
  }
  return win;
}

}  // namespace

SpectrumEstimate estimate_csd(std::span<const double> x,
                              std::span<const double> y, double sample_rate,
                              const EstimatorConfig& cfg) {
  cfg.validate();
  if (x.size() != y.size()) {
    throw std::invalid_argument("input series must have equal lengths");
  }
  if (!(sample_rate > 0.0)) {
    throw std::invalid_argument("sample rate must be > 0");
  }
  const std::size_t len = cfg.segment_len;
  if (x.size() < 2 * len) {
    throw std::invalid_argument("need at least two segments of data");
  }

  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(
             static_cast<double>(len) * (1.0 - cfg.overlap))));
  const std::size_t n_seg = (x.size() - len) / hop + 1;
  const std::size_t n_bins = len / 2 + 1;

  const std::vector<double> win = make_window(cfg.window, len);
  double wss = 0.0;
  for (double w : win) wss += w * w;

  std::vector<std::complex<double>> acc(n_bins, {0.0, 0.0});
  // Welford accumulators for the per-bin standard error of Re(value)
  std::vector<double> mean_re(n_bins, 0.0);
  std::vector<double> m2_re(n_bins, 0.0);

  std::vector<std::complex<double>> fx(len);
  std::vector<std::complex<double>> fy(len);
  for (std::size_t s = 0; s < n_seg; ++s) {
    const std::size_t off = s * hop;
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      mx += x[off + i];
      my += y[off + i];
    }
    mx /= static_cast<double>(len);
    my /= static_cast<double>(len);
    for (std::size_t i = 0; i < len; ++i) {
      fx[i] = win[i] * (x[off + i] - mx);
      fy[i] = win[i] * (y[off + i] - my);
    }
    detail::fft_pow2(fx);
    detail::fft_pow2(fy);

    const double count = static_cast<double>(s + 1);
    for (std::size_t k = 0; k < n_bins; ++k) {
      const std::complex<double> p = fx[k] * std::conj(fy[k]) / wss;
      acc[k] += p;
      const double d = p.real() - mean_re[k];
      mean_re[k] += d / count;
      m2_re[k] += d * (p.real() - mean_re[k]);
    }
  }

  SpectrumEstimate est;
  est.n_segments = static_cast<int>(n_seg);
  est.window = cfg.window;
  est.overlap = cfg.overlap;
  est.sample_rate = sample_rate;
  est.freqs.resize(n_bins);
  est.values.resize(n_bins);
  est.stat_sigma.resize(n_bins);
  const double inv_seg = 1.0 / static_cast<double>(n_seg);
  for (std::size_t k = 0; k < n_bins; ++k) {
    est.freqs[k] =
        static_cast<double>(k) * sample_rate / static_cast<double>(len);
    est.values[k] = acc[k] * inv_seg;
    est.stat_sigma[k] =
        n_seg > 1 ? std::sqrt(m2_re[k] / static_cast<double>(n_seg - 1) *
                              inv_seg)
                  : 0.0;
  }
  return est;
}

SpectrumEstimate estimate_psd(std::span<const double> x, double sample_rate,
                              const EstimatorConfig& cfg) {
  SpectrumEstimate est = estimate_csd(x, x, sample_rate, cfg);
  for (auto& v : est.values) v = {std::max(0.0, v.real()), 0.0};
  return est;
}

BandAverage band_average(const SpectrumEstimate& est, double f_lo, double f_hi) {
  if (!(f_lo < f_hi)) {
    throw std::invalid_argument("band must satisfy f_lo < f_hi");
  }
  const std::size_t n = est.freqs.size();
  std::vector<std::size_t> bins;
  for (std::size_t k = 1; k + 1 < n; ++k) {  // DC and Nyquist excluded
    if (est.freqs[k] >= f_lo && est.freqs[k] <= f_hi) bins.push_back(k);
  }
  if (bins.empty()) throw std::invalid_argument("band contains no bins");

  BandAverage out;
  out.n_bins = bins.size();

  bool have_sigma = true;
  for (std::size_t k : bins) {
    if (!(est.stat_sigma[k] > 0.0)) have_sigma = false;
  }

  if (have_sigma) {
    double wsum = 0.0;
    std::complex<double> vsum{0.0, 0.0};
    for (std::size_t k : bins) {
      const double w = 1.0 / (est.stat_sigma[k] * est.stat_sigma[k]);
      wsum += w;
      vsum += w * est.values[k];
    }
    out.mean = vsum / wsum;
  } else {
    std::complex<double> vsum{0.0, 0.0};
    for (std::size_t k : bins) vsum += est.values[k];
    out.mean = vsum / static_cast<double>(bins.size());
  }

  // standard error of the mean from the residual scatter across bins,
  // with lag-1/lag-2 autocovariance terms: tapered windows correlate
  // neighbouring bins, so the naive scatter/sqrt(n) runs optimistic
  const std::size_t m = bins.size();
  if (m < 2) {
    out.sigma = have_sigma ? est.stat_sigma[bins.front()] : 0.0;
    return out;
  }
  std::vector<double> resid(m);
  for (std::size_t i = 0; i < m; ++i) {
    resid[i] = est.values[bins[i]].real() - out.mean.real();
  }
  double c0 = 0.0;
  for (double d : resid) c0 += d * d;
  c0 /= static_cast<double>(m);
  double c1 = 0.0;
  if (m > 2) {
    for (std::size_t i = 0; i + 1 < m; ++i) c1 += resid[i] * resid[i + 1];
    c1 /= static_cast<double>(m - 1);
  }
  double c2 = 0.0;
  if (m > 3) {
    for (std::size_t i = 0; i + 2 < m; ++i) c2 += resid[i] * resid[i + 2];
    c2 /= static_cast<double>(m - 2);
  }
  const double var_mean =
      std::max(0.0, c0 + 2.0 * c1 + 2.0 * c2) / static_cast<double>(m - 1);
  out.sigma = std::sqrt(var_mean);
  return out;
}

}  // namespace hetcorr
