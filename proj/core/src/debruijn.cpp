#include "fdzeros/debruijn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fdzeros {

bool sin_is_zero(double theta) noexcept { return std::abs(std::sin(theta)) <= kSinZeroTol; }

bool near_degenerate(double theta) noexcept {
  const double s = std::abs(std::sin(theta));
  return s > kSinZeroTol && s <= kNearDegenerateSin;
}

Complex unit_phase(double theta) noexcept {
  if (sin_is_zero(theta)) return std::cos(theta) > 0.0 ? 1.0 : -1.0;
  return std::polar(1.0, theta);
}

DeBruijnOp::DeBruijnOp(double theta_, double h_) : theta(theta_), h(h_) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::kInvalidArgument, "h must be positive");
  if (!std::isfinite(theta)) throw Error(ErrorCode::kInvalidArgument, "theta must be finite");
}

Polynomial apply_tb(const DeBruijnOp& op, const Polynomial& p) {
  if (p.is_zero()) return {};
  const Complex phase = unit_phase(op.theta);
  const Complex i{0.0, 1.0};
  const std::pair<Complex, Polynomial> terms[] = {
      {phase / i, shift_arg(p, -i * op.h)},
      {-std::conj(phase) / i, shift_arg(p, i * op.h)},
  };
  Polynomial image = linear_combine(terms);
  if (is_real_coeffs(p, 0.0).max_imag == 0.0) {
    const double scale = image.max_abs_coeff();
    if (is_real_coeffs(image, 0.0).max_imag > 1e-10 * scale)
      throw Error(ErrorCode::kImaginaryResidue, "real input produced a non-real image");
    image = real_part(image);
  }
  return image;
}

Polynomial qn(int n, double theta) { return gn(n, theta, 1.0); }

Polynomial gn(int n, double theta, double h) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be non-negative");
  return apply_tb(DeBruijnOp(theta, h), Polynomial::monomial(static_cast<std::size_t>(n)));
}

CotangentZeros qn_zeros(int n, double theta) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  CotangentZeros out;
  out.n = n;
  out.theta = theta;
  out.conditioning_warning = near_degenerate(theta);
  const double pi = std::numbers::pi;
  double reduced = std::fmod(theta, pi);
  if (reduced < 0.0) reduced += pi;
  const bool degenerate = sin_is_zero(theta);
  if (degenerate) reduced = 0.0;
  out.count = degenerate ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n);
  out.zeros.reserve(out.count);
  for (std::size_t k = 1; k <= out.count; ++k)
    out.zeros.push_back(1.0 / std::tan((-reduced + pi * static_cast<double>(k)) / n));
  return out;
}

ExtremalBounds extremal_bounds(const RootSet& p_roots, double theta, double h, double tol) {
  const int n = static_cast<int>(p_roots.roots.size());
  if (n < 1) throw Error(ErrorCode::kTooFewRoots, "extremal bounds need deg P >= 1");
  const Extremes ep = extremes(p_roots, tol);
  const CotangentZeros z = qn_zeros(n, theta);
  if (z.count == 0) throw Error(ErrorCode::kTooFewRoots, "Q_n has no zeros (n = 1, sin theta = 0)");
  // zeros are strictly decreasing
  return {ep.largest + h * z.zeros.front(), ep.smallest + h * z.zeros.back()};
}

ExtremalBounds extremal_bounds(const Polynomial& p, double theta, double h, double tol,
                               const RootFinderConfig& cfg) {
  return extremal_bounds(roots(p, cfg), theta, h, tol);
}

double mesh_floor(int n, double theta, double h) {
  const CotangentZeros z = qn_zeros(n, theta);
  if (z.count < 2) throw Error(ErrorCode::kTooFewRoots, "Q_n has fewer than two zeros");
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < z.count; ++k) m = std::min(m, z.zeros[k - 1] - z.zeros[k]);
  return h * m;
}

double simplicity_margin(const Polynomial& p, double theta, double h, const RootFinderConfig& cfg) {
  const Polynomial image = apply_tb(DeBruijnOp(theta, h), p);
  if (!image.degree() || *image.degree() < 2) return std::numeric_limits<double>::infinity();
  const RootSet rs = roots(image, cfg);
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    for (std::size_t j = i + 1; j < rs.roots.size(); ++j) m = std::min(m, std::abs(rs.roots[i] - rs.roots[j]));
  return m;
}

Polynomial line_image(const Polynomial& p, double beta, double theta) {
  const std::pair<Complex, Polynomial> terms[] = {
      {1.0, shift_arg(p, Complex{0.0, beta})},
      {-unit_phase(theta), p},
  };
  return linear_combine(terms);
}

ZeroCheck check_zeros(const CotangentZeros& z, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::kInvalidArgument, "h must be positive and finite");
  const Polynomial g = gn(z.n, z.theta, h);
  ZeroCheck out;
  out.h = h;
  for (const double x : z.zeros) {
    const double at = h * x;
    double bound = 0.0;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) bound = bound * std::abs(at) + std::abs(*it);
    out.scaled_zeros.push_back(at);
    out.residuals.push_back(bound > 0.0 ? std::abs(evaluate(g, at)) / bound : 0.0);
  }
  return out;
}

}  // namespace fdzeros
