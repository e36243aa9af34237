#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hetcorr {

enum class Window { hann, rectangular };

std::string window_name(Window w);
Window window_from_name(const std::string& name);

struct EstimatorConfig {
  std::size_t segment_len = 4096;  // power of two
  Window window = Window::hann;
  double overlap = 0.5;  // fraction in [0, 1)

  void validate() const;
};

/// One-sided segment-averaged cross spectrum. Normalization follows the
/// per-Nyquist-band convention: a white pair with per-sample cross-covariance
/// c estimates values ~ c on every bin, so everything reads directly in SNU.
struct SpectrumEstimate {
  std::vector<double> freqs;                 // Hz, ascending, [0, f_s/2]
  std::vector<std::complex<double>> values;  // SNU
  std::vector<double> stat_sigma;  // standard error of Re(value), per bin
  int n_segments = 0;
  Window window = Window::hann;
  double overlap = 0.5;
  double sample_rate = 1.0;
};

/// Welch cross-spectral estimate of Re/Im CSD between x and y. Per-segment
/// means are removed before windowing; segments are reduced in index order
/// so results are bit-reproducible. estimate_csd(x, y) is the complex
/// conjugate of estimate_csd(y, x) exactly.
SpectrumEstimate estimate_csd(std::span<const double> x,
                              std::span<const double> y, double sample_rate,
                              const EstimatorConfig& cfg = {});

/// Auto-PSD: estimate_csd(x, x); values are real and non-negative.
SpectrumEstimate estimate_psd(std::span<const double> x, double sample_rate,
                              const EstimatorConfig& cfg = {});

struct BandAverage {
  std::complex<double> mean{0.0, 0.0};
  double sigma = 0.0;
  std::size_t n_bins = 0;
};

/// Inverse-variance-weighted mean over bins with f_lo <= f <= f_hi. DC and
/// Nyquist bins are always excluded; bins are treated as independent.
BandAverage band_average(const SpectrumEstimate& est, double f_lo, double f_hi);

namespace detail {
/// In-place radix-2 decimation-in-time FFT; n must be a power of two.
void fft_pow2(std::span<std::complex<double>> data);
bool is_pow2(std::size_t n);
}  // namespace detail

}  // namespace hetcorr
