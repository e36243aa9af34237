#include "hetcorr/state.hpp"

#include <stdexcept>

namespace hetcorr {

Cov2 Cov2::congruence(double m00, double m01, double m10, double m11) const {
  // rows of M * C
  const double a0 = m00 * xx + m01 * xy;
  const double a1 = m00 * xy + m01 * yy;
  const double b0 = m10 * xx + m11 * xy;
  const double b1 = m10 * xy + m11 * yy;
  return {a0 * m00 + a1 * m01, a0 * m10 + a1 * m11, b0 * m10 + b1 * m11};
}

QuadratureState vacuum() { return QuadratureState{}; }

QuadratureState apply_two_mode_squeeze(const QuadratureState& state,
                                       const SqueezeParams& sq) {
  if (sq.r < 0.0) {
    throw std::invalid_argument("squeeze parameter r must be >= 0");
  }
  const double half = 0.5 * sq.squeeze_phase;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double ep = std::exp(sq.r);
  const double em = std::exp(-sq.r);
  // S = R(half) diag(e^r, e^-r) R(half)^T; anti-squeezed axis at angle half.
  const double m00 = c * c * ep + s * s * em;
  const double m01 = c * s * (ep - em);
  const double m11 = s * s * ep + c * c * em;

  QuadratureState out;
  out.cov = state.cov.congruence(m00, m01, m01, m11);
  // cosh/sinh mixing of the mean; conj pairs the signal and idler sidebands.
  out.mean = std::cosh(sq.r) * state.mean +
             std::polar(std::sinh(sq.r), sq.squeeze_phase) *
                 std::conj(state.mean);
  return out;
}

double quadrature_variance(const QuadratureState& state, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c * state.cov.xx + s * s * state.cov.yy +
         2.0 * s * c * state.cov.xy;
}

std::array<QuadratureState, 2> beamsplitter_5050(const QuadratureState& a,
                                                 const QuadratureState& b) {
  constexpr std::complex<double> i{0.0, 1.0};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Multiplication by i rotates the quadrature plane by +90 degrees:
  // J = [[0,-1],[1,0]], and J C J^T swaps the diagonal and flips xy.
  const auto rot90 = [](const Cov2& c90) {
    return Cov2{c90.yy, -c90.xy, c90.xx};
  };

  QuadratureState out1;
  QuadratureState out2;
  out1.mean = (a.mean + i * b.mean) * inv_sqrt2;
  out2.mean = (i * a.mean + b.mean) * inv_sqrt2;
  out1.cov = 0.5 * (a.cov + rot90(b.cov));
  out2.cov = 0.5 * (rot90(a.cov) + b.cov);
  return {out1, out2};
}

QuadratureState attenuate(const QuadratureState& state, double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("attenuation gamma must lie in [0,1]");
  }
  const double g2 = gamma * gamma;
  QuadratureState out;
  out.mean = gamma * state.mean;
  out.cov = g2 * state.cov + (1.0 - g2) * Cov2::identity();
  return out;
}

}  // namespace hetcorr
