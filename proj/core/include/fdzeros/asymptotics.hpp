#pragma once

/**
 * @file asymptotics.hpp
 * @brief Large-h behaviour of the zeros of T_{theta,h}(P).
 *
 * For monic P = x^n + a x^{n-1} + b x^{n-2} + c x^{n-3} + ..., the j-th zero (ascending)
 * of T_{theta,h}(P) is
 *
 *   X_j = x_j h - a/n
 *       + (a^2 (n-1)/(2n^2) - b/n) * Q_{n-2}(x_j)/Q_{n-1}(x_j) / h                      (order 1)
 *       + (-a^3 (n-1)(n-2)/(3n^3) + ab(n-2)/n^2 - c/n) * Q_{n-3}(x_j)/Q_{n-1}(x_j) / h^2 (order 2)
 *
 * with remainders O(1/h^2) and O(1/h^3) respectively, x_j the zeros of Q_n(., theta).
 */

#include <vector>

#include "fdzeros/polynomial.hpp"
#include "fdzeros/rootfind.hpp"

namespace fdzeros {

struct MonicHead {
  int n = 0;
  Complex a;  ///< coefficient of x^{n-1}
  Complex b;  ///< coefficient of x^{n-2}
  Complex c;  ///< coefficient of x^{n-3}, 0 when n = 2
  Polynomial full;
};

/// Normalizes by the leading coefficient. Throws DegreeTooSmall for n < 2.
MonicHead monic_head(const Polynomial& p);

/// Predicted zeros in ascending order of x_j. `order` is 0, 1 or 2.
std::vector<Complex> predict_roots(const MonicHead& head, double theta, double h, int order);

/// Zeros of T_{theta,h}(P) sorted ascending by real part.
std::vector<Complex> actual_roots(const Polynomial& p, double theta, double h,
                                  const RootFinderConfig& cfg = {});

/// Smallest h for which sorted-order matching is trusted: 2 (1 + max |root of P|).
double matching_floor(const Polynomial& p, const RootFinderConfig& cfg = {});

struct SweepConfig {
  double h_min = 10.0;
  double h_max = 1000.0;
  int steps = 25;
  int order = 1;
  /// Reject h_min below matching_floor(P).
  bool enforce_floor = true;
};

struct AsymptoticRecord {
  double h = 0.0;
  int j = 0;  ///< 1-based
  Complex actual;
  Complex predicted;
  double residual = 0.0;         ///< |actual - predicted|
  double scaled_residual = 0.0;  ///< residual * h^{order+1}
};

struct AsymptoticReport {
  double theta = 0.0;
  int order = 0;
  std::vector<double> h_grid;
  std::vector<AsymptoticRecord> records;
  /// Least-squares slope of log residual against log h over all records with residual > 0;
  /// NaN when there are fewer than two such records.
  double fitted_decay = 0.0;
  /// Over the upper half of the h-grid, max_j scaled_residual stays within 10x the
  /// median (over the whole grid) of that per-h maximum. Residuals at or below
  /// 1e-12 max(1, |actual|) are roundoff and take no part; if none remain the bound holds.
  bool omega_bound_ok = false;
  bool conditioning_warning = false;
};

/// Geometric h-grid sweep comparing actual and predicted zeros by sorted order. Throws
/// MatchAmbiguity when two actual zeros have real parts closer than 1e-6 h.
AsymptoticReport residual_sweep(const Polynomial& p, double theta, const SweepConfig& sweep,
                                const RootFinderConfig& cfg = {});

}  // namespace fdzeros
