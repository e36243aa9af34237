#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace hetcorr {

/// Symmetric 2x2 quadrature covariance matrix, stored as (xx, xy, yy).
struct Cov2 {
  double xx = 1.0;
  double xy = 0.0;
  double yy = 1.0;

  static Cov2 identity() { return {1.0, 0.0, 1.0}; }
  static Cov2 diagonal(double a, double b) { return {a, 0.0, b}; }

  double det() const { return xx * yy - xy * xy; }
  double trace() const { return xx + yy; }

  /// Congruence transform M * C * M^T for a general 2x2 matrix
  /// M = [[m00, m01], [m10, m11]].
  Cov2 congruence(double m00, double m01, double m10, double m11) const;

  bool approx_equal(const Cov2& other, double tol) const {
    return std::abs(xx - other.xx) <= tol && std::abs(xy - other.xy) <= tol &&
           std::abs(yy - other.yy) <= tol;
  }
};

inline Cov2 operator+(const Cov2& a, const Cov2& b) {
  return {a.xx + b.xx, a.xy + b.xy, a.yy + b.yy};
}

inline Cov2 operator*(double s, const Cov2& c) {
  return {s * c.xx, s * c.xy, s * c.yy};
}

/// Mean amplitude and quadrature covariance of one optical mode, in
/// shot-noise units (vacuum covariance = identity). The mean is the
/// complex baseband amplitude; Re/Im are the two quadratures.
struct QuadratureState {
  std::complex<double> mean{0.0, 0.0};
  Cov2 cov = Cov2::identity();

  bool is_physical(double tol = 1e-9) const {
    return cov.xx > 0.0 && cov.yy > 0.0 && cov.det() >= 1.0 - tol;
  }
};

/// Two-mode squeeze strength and orientation. squeeze_phase = 0 puts the
/// squeezed quadrature at angle pi/2 (variance e^{-2r}) and the
/// anti-squeezed quadrature at angle 0 (variance e^{2r}).
struct SqueezeParams {
  double r = 0.0;
  double squeeze_phase = 0.0;
};

/// Monochromatic local oscillator. theta_l selects the measured quadrature.
struct LocalOscillator {
  double amplitude = 1.0;          // eps_l, arbitrary units, > 0
  double phase = 0.0;              // theta_l, radians
  double angular_frequency = 1.0;  // omega_l, rad/s, >> analysis band
};

/// Physical prefactors of the photocurrent spectra. K is the power spectral
/// density scale; SNU = 2K is the shot-noise PSD of a conventional balanced
/// heterodyne detector. Desk-scale defaults make SNU = 1 for a unit LO.
struct GainConstants {
  double eta = 1.0;       // quantum efficiency
  double e_charge = 1.0;  // electron charge
  double c_light = 1.0;   // speed of light
  double eps0 = 1.0;      // vacuum permittivity
  double hbar = 1.0;      // reduced Planck constant

  double k_scale(const LocalOscillator& lo) const {
    return c_light * eps0 * eta * eta * e_charge * e_charge * lo.amplitude *
           lo.amplitude * hbar * lo.angular_frequency;
  }
  double snu(const LocalOscillator& lo) const { return 2.0 * k_scale(lo); }

  /// Amplitude-squared scale of the deterministic beat, (eta e c eps0 eps_l)^2
  /// times beta_s^2 supplied by the caller.
  double beat_power_scale(const LocalOscillator& lo) const {
    const double a = eta * e_charge * c_light * eps0 * lo.amplitude;
    return a * a;
  }

  /// Constants chosen so that K = 1/2 and SNU = 1 for a unit-amplitude,
  /// unit-frequency LO; every spectrum then reads directly in SNU.
  static GainConstants desk_scale() {
    GainConstants g;
    g.hbar = 0.5;
    return g;
  }
};

QuadratureState vacuum();

/// Reduced single-mode action of the two-mode squeezing evolution on the
/// effective baseband quadrature pair. Vacuum maps to
/// cov = diag(e^{2r}, e^{-2r}) for squeeze_phase = 0; the map is symplectic
/// (det preserved). Throws std::invalid_argument for r < 0.
QuadratureState apply_two_mode_squeeze(const QuadratureState& state,
                                       const SqueezeParams& sq);

/// Variance of the quadrature at angle theta:
/// cos^2(t) Cxx + sin^2(t) Cyy + 2 sin(t)cos(t) Cxy.
double quadrature_variance(const QuadratureState& state, double theta);

/// 50-50 beamsplitter, matrix (1/sqrt2) [[1, i], [i, 1]]. Returns the two
/// output marginals; cross-correlations between the outputs are not tracked.
std::array<QuadratureState, 2> beamsplitter_5050(const QuadratureState& a,
                                                 const QuadratureState& b);

/// Amplitude attenuation by gamma in [0,1], mixing in vacuum:
/// mean -> gamma*mean, cov -> gamma^2 cov + (1-gamma^2) I.
/// Throws std::invalid_argument for gamma outside [0,1].
QuadratureState attenuate(const QuadratureState& state, double gamma);

}  // namespace hetcorr
