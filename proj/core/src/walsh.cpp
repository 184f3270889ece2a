#include "fdzeros/walsh.hpp"

#include <cmath>

#include "fdzeros/debruijn.hpp"

namespace fdzeros {

namespace {

void check_frame(const Polynomial& f, int n, const char* name) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "frame degree must be non-negative");
  if (f.degree() && static_cast<int>(*f.degree()) > n)
    throw Error(ErrorCode::kDegreeExceedsFrame, std::string(name) + " has degree above the frame");
}

// (i + m)! / i!
double falling(std::size_t i, std::size_t m) {
  double v = 1.0;
  for (std::size_t t = 1; t <= m; ++t) v *= static_cast<double>(i + t);
  return v;
}

}  // namespace

ConvolutionFrame make_frame(const Polynomial& p, const Polynomial& q, int n) {
  check_frame(p, n, "P");
  check_frame(q, n, "Q");
  ConvolutionFrame f;
  f.n = n;
  f.q = q;
  f.p_derivs_at_0.resize(static_cast<std::size_t>(n) + 1);
  double fact = 1.0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    f.p_derivs_at_0[k] = fact * p.coeff(k);
  }
  return f;
}

Polynomial walsh_convolve(const Polynomial& p, const Polynomial& q, int n) {
  const ConvolutionFrame f = make_frame(p, q, n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> out(un + 1);
  for (std::size_t k = 0; k <= un; ++k) {
    const Complex pk = f.p_derivs_at_0[k];
    if (pk == Complex{}) continue;
    // coefficient of x^i in Q^(n-k) is q_{i+n-k} (i+n-k)!/i!
    const std::size_t m = un - k;
    for (std::size_t i = 0; i + m <= un; ++i) out[i] += pk * q.coeff(i + m) * falling(i, m);
  }
  return Polynomial(std::move(out));
}

ApolarityReport apolarity(const Polynomial& p, const Polynomial& q, int n, double tol) {
  const ConvolutionFrame f = make_frame(p, q, n);
  const auto un = static_cast<std::size_t>(n);
  ApolarityReport r;
  for (std::size_t k = 0; k <= un; ++k) {
    // Q^(n-k)(0) = (n-k)! q_{n-k}
    const Complex term = (k % 2 == 0 ? 1.0 : -1.0) * f.p_derivs_at_0[k] * q.coeff(un - k) * falling(0, un - k);
    r.sum += term;
    r.scale += std::abs(term);
  }
  r.apolar = std::abs(r.sum) <= tol * r.scale;
  return r;
}

Polynomial tb_via_walsh(const Polynomial& p, double theta, double h) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "tb_via_walsh needs a nonzero polynomial");
  const int n = static_cast<int>(*p.degree());
  const Polynomial g = gn(n, theta, h);
  return (1.0 / falling(0, static_cast<std::size_t>(n))) * walsh_convolve(p, g, n);
}

Interval walsh_interval_bound(const RootSet& p_roots, const RootSet& q_roots, double tol) {
  const Extremes ep = extremes(p_roots, tol);
  const Extremes eq = extremes(q_roots, tol);
  return {ep.smallest + eq.smallest, ep.largest + eq.largest};
}

Interval walsh_interval_bound(const Polynomial& p, const Polynomial& q, int n, double tol,
                              const RootFinderConfig& cfg) {
  if (p.degree() != static_cast<std::size_t>(n) || q.degree() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::kInvalidArgument, "interval bound needs deg P = deg Q = n");
  return walsh_interval_bound(roots(p, cfg), roots(q, cfg), tol);
}

}  // namespace fdzeros
