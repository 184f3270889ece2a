#pragma once

/**
 * @file walsh.hpp
 * @brief Walsh convolution P [+] Q (x) = sum_k P^(k)(0) Q^(n-k)(x) in an explicit degree
 *        frame n, apolarity, and the identity T_{theta,h}(P) = (P [+] G_n) / n!.
 *
 * Both inputs are zero-padded to the frame degree, which lets G_n take part even when
 * its leading coefficient has vanished (sin theta = 0).
 */

#include <vector>

#include "fdzeros/polynomial.hpp"
#include "fdzeros/rootfind.hpp"

namespace fdzeros {

struct ConvolutionFrame {
  int n = 0;
  /// P^(k)(0) = k! p_k for k = 0..n.
  std::vector<Complex> p_derivs_at_0;
  Polynomial q;
};

/// Throws DegreeExceedsFrame if deg P or deg Q exceeds n.
ConvolutionFrame make_frame(const Polynomial& p, const Polynomial& q, int n);

Polynomial walsh_convolve(const Polynomial& p, const Polynomial& q, int n);

struct ApolarityReport {
  bool apolar = false;
  /// sum_k (-1)^k P^(k)(0) Q^(n-k)(0)
  Complex sum;
  /// sum_k |(-1)^k P^(k)(0) Q^(n-k)(0)|
  double scale = 0.0;
};

/// apolar iff |sum| <= tol * scale.
ApolarityReport apolarity(const Polynomial& p, const Polynomial& q, int n, double tol);

inline bool apolar(const Polynomial& p, const Polynomial& q, int n, double tol) {
  return apolarity(p, q, n, tol).apolar;
}

/// (1/n!) P [+] G_n(., theta, h) with n = deg P. Agrees with apply_tb up to roundoff.
Polynomial tb_via_walsh(const Polynomial& p, double theta, double h);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// [mu(P) + mu(Q), lambda(P) + lambda(Q)] for real-rooted P and Q.
Interval walsh_interval_bound(const RootSet& p_roots, const RootSet& q_roots,
                              double tol = kDefaultRealTol);
Interval walsh_interval_bound(const Polynomial& p, const Polynomial& q, int n,
                              double tol = kDefaultRealTol, const RootFinderConfig& cfg = {});

}  // namespace fdzeros
