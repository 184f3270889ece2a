#pragma once

/**
 * @file debruijn.hpp
 * @brief The two-point operator T_{theta,h}(P)(x) = (e^{i theta} P(x + ih) - e^{-i theta} P(x - ih)) / i,
 *        its monomial images Q_n(x, theta) = T_{theta,1}(x^n) and G_n(x, theta, h) = T_{theta,h}(x^n),
 *        and the zero-location quantities derived from them.
 *
 * "sin theta = 0" is decided as |sin theta| <= kSinZeroTol. In that case the phase
 * e^{i theta} is snapped to exactly +-1 so the leading coefficient of every image
 * cancels exactly and the degree drops by one.
 */

#include <cstddef>
#include <vector>

#include "fdzeros/polynomial.hpp"
#include "fdzeros/rootfind.hpp"

namespace fdzeros {

inline constexpr double kSinZeroTol = 1e-12;
inline constexpr double kNearDegenerateSin = 1e-6;

bool sin_is_zero(double theta) noexcept;

/// kSinZeroTol < |sin theta| <= kNearDegenerateSin: the leading coefficient nearly vanishes.
bool near_degenerate(double theta) noexcept;

/// e^{i theta}, exactly +-1 when sin_is_zero(theta).
Complex unit_phase(double theta) noexcept;

struct DeBruijnOp {
  DeBruijnOp(double theta, double h);

  double theta;
  double h;
};

/// Two Taylor shifts and one linear combination. For real-coefficient P the result is made
/// exactly real after checking that no imaginary part exceeds 1e-10 * scale; otherwise
/// ImaginaryResidue is thrown.
Polynomial apply_tb(const DeBruijnOp& op, const Polynomial& p);

/// Q_n(x, theta); Q_0 = 2 sin theta (the zero polynomial when sin theta = 0).
Polynomial qn(int n, double theta);

/// G_n(x, theta, h) = T_{theta,h}(x^n) = h^n Q_n(x/h, theta).
Polynomial gn(int n, double theta, double h);

struct CotangentZeros {
  int n = 0;
  double theta = 0.0;
  /// cot((-theta + pi k)/n) for k = 1..count, strictly decreasing.
  std::vector<double> zeros;
  /// n when sin theta != 0, n - 1 otherwise.
  std::size_t count = 0;
  bool conditioning_warning = false;
};

/// Closed-form zeros of Q_n. theta is reduced modulo pi first, so the arguments of cot stay
/// in (0, pi).
CotangentZeros qn_zeros(int n, double theta);

/// The closed-form zeros scaled by h, with the relative residual
/// |G_n(h x_k)| / sum_i |g_i| |h x_k|^i of each one as a cross-check.
struct ZeroCheck {
  double h = 1.0;
  std::vector<double> scaled_zeros;
  std::vector<double> residuals;
};

ZeroCheck check_zeros(const CotangentZeros& z, double h);

struct ExtremalBounds {
  double lambda_bound = 0.0;  ///< upper bound on the largest image root
  double mu_bound = 0.0;      ///< lower bound on the smallest image root
};

/// lambda(P) + h lambda(Q_n) and mu(P) + h mu(Q_n) for real-rooted P of degree n >= 1.
ExtremalBounds extremal_bounds(const RootSet& p_roots, double theta, double h,
                               double tol = kDefaultRealTol);
ExtremalBounds extremal_bounds(const Polynomial& p, double theta, double h,
                               double tol = kDefaultRealTol, const RootFinderConfig& cfg = {});

/// h * mesh(Q_n zeros): the smallest mesh T_{theta,h} can produce from a degree-n input.
/// Throws TooFewRoots when Q_n has fewer than two zeros.
double mesh_floor(int n, double theta, double h);

/// Smallest distance between two roots of T_{theta,h}(P); +inf for fewer than two roots.
double simplicity_margin(const Polynomial& p, double theta, double h, const RootFinderConfig& cfg = {});

/// P(x - i beta) - e^{i theta} P(x). Zeros of P on Im z = c go to Im z = c + beta/2.
Polynomial line_image(const Polynomial& p, double beta, double theta);

}  // namespace fdzeros
