#include "fdzeros/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "fdzeros/asymptotics.hpp"
#include "fdzeros/debruijn.hpp"
#include "fdzeros/rootfind.hpp"
#include "fdzeros/walsh.hpp"

namespace fdzeros {

namespace {

constexpr double kPi = std::numbers::pi;

// A trial fills `detail` with its instance and returns (measured - allowed); it fails
// when that is positive or NaN.
using TrialFn = std::function<double(Rng&, const SuiteConfig&, Json&)>;

struct Property {
  std::string name;
  std::uint64_t stream;  // fixed forever; never renumber
  double weight;         // trials = max(1, round(weight * cfg.trials))
  double tolerated_fraction;
  TrialFn trial;
};

Complex random_complex(Rng& rng, double r) { return {rng.uniform(-r, r), rng.uniform(-r, r)}; }

Polynomial random_complex_poly(Rng& rng, int n, double r = 1.0) {
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (auto& v : c) v = random_complex(rng, r);
  if (c.back() == Complex{}) c.back() = 1.0;
  return Polynomial(std::move(c));
}

Polynomial random_real_poly(Rng& rng, int n, bool monic) {
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (auto& v : c) v = rng.uniform(-1.0, 1.0);
  if (monic || c.back() == Complex{}) c.back() = 1.0;
  return Polynomial(std::move(c));
}

double magnitude(std::span<const Complex> zs) {
  double m = 1.0;
  for (const Complex z : zs) m = std::max(m, std::abs(z));
  return m;
}

double realness_excess(const RootSet& rs, double tol) {
  const RealnessVerdict v = classify_real(rs, tol);
  return v.max_imag - tol * magnitude(rs.roots);
}

double known_mesh(const std::vector<double>& sorted_roots) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted_roots.size(); ++i) m = std::min(m, sorted_roots[i] - sorted_roots[i - 1]);
  return m;
}

// theta uniform on [0, 2 pi) except that one draw in four is exactly 0 or pi.
double draw_theta(Rng& rng) {
  if (rng.uniform_int(0, 3) == 0) return rng.uniform_int(0, 1) == 0 ? 0.0 : kPi;
  return rng.uniform(0.0, 2.0 * kPi);
}

FDOperator preserver_with_shift(Rng& rng, Complex lambda, int max_half_order) {
  const int m = rng.uniform_int(1, max_half_order);
  const double scale = rng.uniform(0.5, 2.0) * (rng.uniform_int(0, 1) == 0 ? 1.0 : -1.0);
  Polynomial g{scale};
  for (int k = 0; k < 2 * m; ++k) {
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    g = multiply(g, Polynomial{std::polar(1.0, phi / 2.0), std::polar(1.0, -phi / 2.0)});
  }
  return from_generating(lambda, -m, g);
}

// Rejection-samples roots until adjacent gaps exceed a fixed fraction of the range, so the
// computed mesh is well conditioned.
Polynomial separated_hyperbolic(int n, const SuiteConfig& cfg, Rng& rng) {
  const double min_gap = 0.05 * (cfg.root_hi - cfg.root_lo);
  for (;;) {
    std::vector<double> rs(static_cast<std::size_t>(n));
    for (auto& r : rs) r = rng.uniform(cfg.root_lo, cfg.root_hi);
    std::sort(rs.begin(), rs.end());
    if (known_mesh(rs) >= min_gap || !(min_gap > 0.0)) return Polynomial::from_real_roots(rs);
  }
}

double draw_beta(Rng& rng) { return rng.uniform(0.2, 1.5) * (rng.uniform_int(0, 1) == 0 ? 1.0 : -1.0); }

std::vector<Property> build_properties() {
  std::vector<Property> ps;

  ps.push_back({"poly.shift_roundtrip", 1, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const Polynomial p = random_complex_poly(rng, rng.uniform_int(0, 20));
                  const Complex lambda = random_complex(rng, 0.2);
                  d["p"] = to_json(p);
                  d["lambda"] = complex_to_json(lambda);
                  return relative_coeff_distance(shift_arg(shift_arg(p, lambda), -lambda), p) - 1e-12;
                }});

  ps.push_back({"poly.shift_eval", 2, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const Polynomial p = random_complex_poly(rng, rng.uniform_int(0, 20));
                  const Complex lambda = random_complex(rng, 1.0);
                  const Complex z = random_complex(rng, 2.0);
                  d["p"] = to_json(p);
                  d["lambda"] = complex_to_json(lambda);
                  d["z"] = complex_to_json(z);
                  double bound = 0.0;
                  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
                    bound = bound * (std::abs(z - lambda) + std::abs(lambda)) + std::abs(*it);
                  const Complex diff = evaluate(shift_arg(p, lambda), z) - evaluate(p, z - lambda);
                  return std::abs(diff) / std::max(bound, 1e-300) - 1e-10;
                }});

  ps.push_back({"poly.derivative_linearity", 3, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const Polynomial p = random_complex_poly(rng, rng.uniform_int(0, 20));
                  const Polynomial q = random_complex_poly(rng, rng.uniform_int(0, 20));
                  const Complex a = random_complex(rng, 2.0), b = random_complex(rng, 2.0);
                  d["p"] = to_json(p);
                  d["q"] = to_json(q);
                  const std::pair<Complex, Polynomial> sum[] = {{a, p}, {b, q}};
                  const std::pair<Complex, Polynomial> parts[] = {{a, derivative(p)}, {b, derivative(q)}};
                  return relative_coeff_distance(derivative(linear_combine(sum)), linear_combine(parts)) - 1e-12;
                }});

  ps.push_back({"rootfind.product_roots", 4, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  std::vector<Complex> rp(static_cast<std::size_t>(rng.uniform_int(1, cfg.degree_max)));
                  std::vector<Complex> rq(static_cast<std::size_t>(rng.uniform_int(1, cfg.degree_max)));
                  for (auto& r : rp) r = random_complex(rng, 2.0);
                  for (auto& r : rq) r = random_complex(rng, 2.0);
                  const Polynomial p = Polynomial::from_roots(rp), q = Polynomial::from_roots(rq);
                  d["p"] = to_json(p);
                  d["q"] = to_json(q);
                  std::vector<Complex> expected = roots(p).roots;
                  const std::vector<Complex> rq_found = roots(q).roots;
                  expected.insert(expected.end(), rq_found.begin(), rq_found.end());
                  const RootSet product = roots(multiply(p, q));
                  return matched_distance(product.roots, expected) - 1e-8 * magnitude(expected);
                }});

  ps.push_back({"rootfind.mesh_translation", 5, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const Polynomial p = separated_hyperbolic(rng.uniform_int(2, cfg.degree_max), cfg, rng);
                  const double t = rng.uniform(-3.0, 3.0);
                  d["p"] = to_json(p);
                  d["t"] = t;
                  const RootSet moved = roots(shift_arg(p, t));
                  return std::abs(mesh(moved, cfg.tol_real) - mesh(roots(p), cfg.tol_real)) - 1e-9 * magnitude(moved.roots);
                }});

  ps.push_back({"rootfind.interlace_pencil", 6, 1.0, 0.01, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const int n = rng.uniform_int(1, std::min(6, cfg.degree_max));
                  Polynomial p, q;
                  if (rng.uniform_int(0, 1) == 0) {
                    std::vector<double> pts(static_cast<std::size_t>(2 * n));
                    for (auto& v : pts) v = rng.uniform(cfg.root_lo, cfg.root_hi);
                    std::sort(pts.begin(), pts.end());
                    std::vector<double> a, b;
                    for (std::size_t i = 0; i < pts.size(); ++i) (i % 2 == 0 ? a : b).push_back(pts[i]);
                    p = Polynomial::from_real_roots(a);
                    q = Polynomial::from_real_roots(b);
                  } else {
                    p = random_hyperbolic(n, cfg.root_lo, cfg.root_hi, rng);
                    q = random_hyperbolic(n, cfg.root_lo, cfg.root_hi, rng);
                  }
                  const std::uint64_t pencil_seed = rng.next();
                  d["p"] = to_json(p);
                  d["q"] = to_json(q);
                  const bool by_sort = interlace(p, q);
                  const bool by_pencil = pencil_hyperbolic_sample(p, q, 200, pencil_seed);
                  d["interlace"] = by_sort;
                  d["pencil"] = by_pencil;
                  return by_sort == by_pencil ? -1.0 : 1.0;
                }});

  ps.push_back({"rootfind.riesz_mesh", 7, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const HyperbolicSample s =
                      random_hyperbolic_sample(rng.uniform_int(3, std::max(3, cfg.degree_max)), cfg.root_lo, cfg.root_hi, rng);
                  d["p"] = to_json(s.poly);
                  // strict inequality for simple roots
                  return known_mesh(s.roots) - mesh(roots(derivative(s.poly)), cfg.tol_real);
                }});

  ps.push_back({"fd.apply_linearity", 8, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  std::map<int, Complex> terms;
                  const int l = rng.uniform_int(-2, 0), m = rng.uniform_int(1, 2);
                  for (int j = l; j <= m; ++j) terms[j] = random_complex(rng, 1.0) + Complex{0.1, 0.0};
                  const FDOperator op(random_complex(rng, 1.0) + Complex{0.0, 0.1}, terms);
                  const Polynomial p = random_complex_poly(rng, rng.uniform_int(0, cfg.degree_max));
                  const Polynomial q = random_complex_poly(rng, rng.uniform_int(0, cfg.degree_max));
                  const Complex a = random_complex(rng, 2.0), b = random_complex(rng, 2.0);
                  d["op"] = to_json(op);
                  d["p"] = to_json(p);
                  d["q"] = to_json(q);
                  const std::pair<Complex, Polynomial> sum[] = {{a, p}, {b, q}};
                  const std::pair<Complex, Polynomial> parts[] = {{a, apply(op, p)}, {b, apply(op, q)}};
                  return relative_coeff_distance(apply(op, linear_combine(sum)), linear_combine(parts)) - 1e-12;
                }});

  ps.push_back({"fd.composition", 9, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const Complex lambda{0.0, draw_beta(rng)};
                  const FDOperator t1 = preserver_with_shift(rng, lambda, 2);
                  const FDOperator t2 = preserver_with_shift(rng, lambda, 2);
                  const Polynomial p = random_hyperbolic(rng.uniform_int(1, cfg.degree_max), cfg.root_lo, cfg.root_hi, rng);
                  d["t1"] = to_json(t1);
                  d["t2"] = to_json(t2);
                  d["p"] = to_json(p);
                  return relative_coeff_distance(apply(t1, apply(t2, p)), apply(compose(t1, t2), p)) - 1e-10;
                }});

  ps.push_back({"fd.verdict_soundness", 10, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  FDOperator op = random_preserver(rng);
                  const Polynomial p = random_hyperbolic(rng.uniform_int(1, cfg.degree_max), cfg.root_lo, cfg.root_hi, rng);
                  if (cfg.fault == Fault::kBrokenOperator) {
                    op = FDOperator(Complex{0.0, 1.0}, {{-1, 1.0}, {1, 4.0}});
                  } else if (!analyze(op).hyperbolicity_preserver) {
                    d["op"] = to_json(op);
                    d["error"] = "analyze rejected a constructed preserver";
                    return 1.0;
                  }
                  d["op"] = to_json(op);
                  d["p"] = to_json(p);
                  const Polynomial image = apply(op, p);
                  if (!image.degree() || *image.degree() == 0) return -1.0;
                  return realness_excess(roots(image), cfg.tol_real);
                }});

  ps.push_back({"fd.real_output", 11, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const FDOperator op = random_preserver(rng);
                  const Polynomial p = random_real_poly(rng, rng.uniform_int(0, cfg.degree_max), false);
                  d["op"] = to_json(op);
                  d["p"] = to_json(p);
                  const Polynomial image = apply(op, p);
                  return is_real_coeffs(image, 0.0).max_imag / std::max(image.max_abs_coeff(), 1e-300) - 1e-10;
                }});

  ps.push_back({"fd.strip_soundness", 12, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  constexpr double b = 1.0;
                  const FDOperator op = random_strip_preserver(rng);
                  std::vector<Complex> zs(static_cast<std::size_t>(rng.uniform_int(1, cfg.degree_max)));
                  for (auto& z : zs) z = {rng.uniform(cfg.root_lo, cfg.root_hi), rng.uniform(-b, b)};
                  const Polynomial p = Polynomial::from_roots(zs);
                  d["op"] = to_json(op);
                  d["p"] = to_json(p);
                  const Polynomial image = apply(op, p);
                  if (!image.degree() || *image.degree() == 0) return -1.0;
                  const RootSet rs = roots(image);
                  double worst = 0.0;
                  for (const Complex r : rs.roots) worst = std::max(worst, std::abs(r.imag()));
                  return worst - (b + 1e-7 * magnitude(rs.roots));
                }});

  ps.push_back({"tb.derivative_ladder", 13, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const int n = rng.uniform_int(1, 20);
                  const double theta = draw_theta(rng);
                  d["n"] = n;
                  d["theta"] = theta;
                  return relative_coeff_distance(derivative(qn(n, theta)), static_cast<double>(n) * qn(n - 1, theta)) - 1e-10;
                }});

  ps.push_back({"tb.scaling", 14, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const int n = rng.uniform_int(0, 20);
                  const double theta = draw_theta(rng), h = rng.uniform(0.2, 3.0);
                  d["n"] = n;
                  d["theta"] = theta;
                  d["h"] = h;
                  const Polynomial expected = std::pow(h, n) * scale_arg(qn(n, theta), 1.0 / h);
                  return relative_coeff_distance(gn(n, theta, h), expected) - 1e-10;
                }});

  ps.push_back({"tb.closed_form_zeros", 15, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const int n = rng.uniform_int(1, 20);
                  const double theta = draw_theta(rng), h = rng.uniform(0.5, 3.0);
                  d["n"] = n;
                  d["theta"] = theta;
                  d["h"] = h;
                  const Polynomial g = gn(n, theta, h);
                  const CotangentZeros z = qn_zeros(n, theta);
                  const std::size_t deg = g.degree().value_or(0);
                  if (deg != z.count) return 1.0;
                  if (z.count == 0) return -1.0;
                  std::vector<Complex> expected;
                  for (const double x : z.zeros) expected.emplace_back(h * x, 0.0);
                  return matched_distance(roots(g).roots, expected) - 1e-8 * magnitude(expected);
                }});

  ps.push_back({"tb.hyperbolicity", 16, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const Polynomial p = random_hyperbolic(rng.uniform_int(1, cfg.degree_max), cfg.root_lo, cfg.root_hi, rng);
                  const double theta = rng.uniform(0.0, 2.0 * kPi), h = rng.uniform(0.5, 2.0);
                  d["p"] = to_json(p);
                  d["theta"] = theta;
                  d["h"] = h;
                  const Polynomial image = apply_tb(DeBruijnOp(theta, h), p);
                  if (*image.degree() == 0) return -1.0;
                  const RootSet rs = roots(image);
                  const double margin = simplicity_margin(p, theta, h);
                  return std::max(realness_excess(rs, cfg.tol_real), -margin);
                }});

  ps.push_back({"tb.mesh_floor", 17, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const bool degenerate = rng.uniform_int(0, 3) == 0;
                  const int n = rng.uniform_int(degenerate ? 3 : 2, std::max(3, cfg.degree_max));
                  const double theta = degenerate ? 0.0 : rng.uniform(0.0, 2.0 * kPi);
                  const double h = rng.uniform(0.5, 2.0);
                  const Polynomial p = random_hyperbolic(n, cfg.root_lo, cfg.root_hi, rng);
                  d["p"] = to_json(p);
                  d["theta"] = theta;
                  d["h"] = h;
                  const RootSet rs = roots(apply_tb(DeBruijnOp(theta, h), p));
                  return mesh_floor(n, theta, h) - 1e-9 * magnitude(rs.roots) - mesh(rs, cfg.tol_real);
                }});

  ps.push_back({"tb.mesh_monotone", 18, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const bool degenerate = rng.uniform_int(0, 3) == 0;
                  const int n = rng.uniform_int(degenerate ? 3 : 2, std::max(3, cfg.degree_max));
                  const double theta = degenerate ? 0.0 : rng.uniform(0.0, 2.0 * kPi);
                  const double h = rng.uniform(0.5, 2.0);
                  const HyperbolicSample s = random_hyperbolic_sample(n, cfg.root_lo, cfg.root_hi, rng);
                  d["p"] = to_json(s.poly);
                  d["theta"] = theta;
                  d["h"] = h;
                  const RootSet rs = roots(apply_tb(DeBruijnOp(theta, h), s.poly));
                  return known_mesh(s.roots) - 1e-9 * magnitude(rs.roots) - mesh(rs, cfg.tol_real);
                }});

  ps.push_back({"tb.extremal_bounds", 19, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const bool degenerate = rng.uniform_int(0, 3) == 0;
                  const int n = rng.uniform_int(degenerate ? 2 : 1, cfg.degree_max);
                  const double theta = degenerate ? kPi : rng.uniform(0.0, 2.0 * kPi);
                  const double h = rng.uniform(0.5, 2.0);
                  const HyperbolicSample s = random_hyperbolic_sample(n, cfg.root_lo, cfg.root_hi, rng);
                  d["p"] = to_json(s.poly);
                  d["theta"] = theta;
                  d["h"] = h;
                  std::vector<Complex> known(s.roots.begin(), s.roots.end());
                  const ExtremalBounds bounds = extremal_bounds(root_set_from(s.poly, known), theta, h);
                  const RootSet rs = roots(apply_tb(DeBruijnOp(theta, h), s.poly));
                  const Extremes e = extremes(rs, cfg.tol_real);
                  return std::max(e.largest - bounds.lambda_bound, bounds.mu_bound - e.smallest) -
                         1e-9 * magnitude(rs.roots);
                }});

  ps.push_back({"tb.line_image", 20, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const int n = rng.uniform_int(1, cfg.degree_max);
                  const double c = rng.uniform(-2.0, 2.0), beta = rng.uniform(-3.0, 3.0);
                  const double theta = rng.uniform(0.0, 2.0 * kPi);
                  const Polynomial p = random_line_poly(n, c, cfg.root_lo, cfg.root_hi, rng);
                  d["p"] = to_json(p);
                  d["beta"] = beta;
                  d["theta"] = theta;
                  d["c"] = c;
                  const Polynomial image = line_image(p, beta, theta);
                  if (!image.degree() || *image.degree() == 0) return -1.0;
                  const RootSet rs = roots(image);
                  double worst = 0.0;
                  for (const Complex r : rs.roots) worst = std::max(worst, std::abs(r.imag() - (c + beta / 2.0)));
                  return worst - 1e-8 * magnitude(rs.roots);
                }});

  ps.push_back({"tb.periodicity", 21, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const int n = rng.uniform_int(0, 20);
                  const double theta = draw_theta(rng);
                  d["n"] = n;
                  d["theta"] = theta;
                  return relative_coeff_distance(qn(n, theta + kPi), -1.0 * qn(n, theta)) - 1e-10;
                }});

  auto walsh_pair = [](Rng& rng, const SuiteConfig& cfg, int min_n, Json& d) {
    const int n = rng.uniform_int(min_n, cfg.degree_max);
    HyperbolicSample p = random_hyperbolic_sample(n, cfg.root_lo, cfg.root_hi, rng);
    HyperbolicSample q = random_hyperbolic_sample(n, cfg.root_lo, cfg.root_hi, rng);
    d["p"] = to_json(p.poly);
    d["q"] = to_json(q.poly);
    return std::tuple{n, std::move(p), std::move(q)};
  };

  ps.push_back({"walsh.hyperbolicity", 22, 1.0, 0.0, [walsh_pair](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const auto [n, p, q] = walsh_pair(rng, cfg, 1, d);
                  return realness_excess(roots(walsh_convolve(p.poly, q.poly, n)), cfg.tol_real);
                }});

  ps.push_back({"walsh.mesh_bound", 23, 1.0, 0.0, [walsh_pair](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const auto [n, p, q] = walsh_pair(rng, cfg, 2, d);
                  const RootSet rs = roots(walsh_convolve(p.poly, q.poly, n));
                  const double floor = std::max(known_mesh(p.roots), known_mesh(q.roots));
                  return floor - 1e-9 * magnitude(rs.roots) - mesh(rs, cfg.tol_real);
                }});

  ps.push_back({"walsh.interval_bound", 24, 1.0, 0.0, [walsh_pair](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const auto [n, p, q] = walsh_pair(rng, cfg, 1, d);
                  const RootSet rs = roots(walsh_convolve(p.poly, q.poly, n));
                  const double lo = p.roots.front() + q.roots.front(), hi = p.roots.back() + q.roots.back();
                  const Extremes e = extremes(rs, cfg.tol_real);
                  return std::max(e.largest - hi, lo - e.smallest) - 1e-9 * magnitude(rs.roots);
                }});

  ps.push_back({"walsh.dual_path", 25, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const Polynomial p = random_real_poly(rng, rng.uniform_int(1, cfg.degree_max), false);
                  const double theta = draw_theta(rng), h = rng.uniform(0.2, 3.0);
                  d["p"] = to_json(p);
                  d["theta"] = theta;
                  d["h"] = h;
                  return relative_coeff_distance(tb_via_walsh(p, theta, h), apply_tb(DeBruijnOp(theta, h), p)) -
                         cfg.tol_identity;
                }});

  ps.push_back({"walsh.root_apolarity", 26, 1.0, 0.0, [walsh_pair](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const auto [n, p, q] = walsh_pair(rng, cfg, 1, d);
                  const RootSet rs = roots(walsh_convolve(p.poly, q.poly, n));
                  const Polynomial reflected = reflect(p.poly);
                  double worst = 0.0;
                  for (const Complex x0 : rs.roots) {
                    const ApolarityReport r = apolarity(reflected, shift_arg(q.poly, -x0), n, 1e-8);
                    worst = std::max(worst, r.scale > 0.0 ? std::abs(r.sum) / r.scale : 0.0);
                  }
                  return worst - 1e-8;
                }});

  ps.push_back({"asym.order_hierarchy", 27, 1.0, 0.0, [](Rng& rng, const SuiteConfig&, Json& d) {
                  const Polynomial p{5.0, -1.0, 2.0, 1.0};
                  constexpr double theta = 0.7;
                  const double h = std::pow(10.0, rng.uniform(2.0, 3.0));
                  d["p"] = to_json(p);
                  d["theta"] = theta;
                  d["h"] = h;
                  const MonicHead head = monic_head(p);
                  const auto actual = actual_roots(p, theta, h);
                  const auto r0 = predict_roots(head, theta, h, 0), r1 = predict_roots(head, theta, h, 1),
                             r2 = predict_roots(head, theta, h, 2);
                  double worst = -std::numeric_limits<double>::infinity();
                  for (std::size_t j = 0; j < actual.size(); ++j) {
                    const double e0 = std::abs(actual[j] - r0[j]), e1 = std::abs(actual[j] - r1[j]),
                                 e2 = std::abs(actual[j] - r2[j]);
                    worst = std::max({worst, e2 - e1, e1 - e0});
                  }
                  return worst;
                }});

  ps.push_back({"asym.omega_bound", 28, 0.25, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const Polynomial p = random_real_poly(rng, rng.uniform_int(2, cfg.degree_max), true);
                  const double theta = rng.uniform_int(0, 4) == 0 ? 0.0 : rng.uniform(0.2, kPi - 0.2);
                  const int order = rng.uniform_int(1, 2);
                  SweepConfig sweep;
                  sweep.h_min = std::max(10.0, matching_floor(p));
                  sweep.h_max = 100.0 * sweep.h_min;
                  sweep.steps = 15;
                  sweep.order = order;
                  d["p"] = to_json(p);
                  d["theta"] = theta;
                  d["order"] = order;
                  return residual_sweep(p, theta, sweep).omega_bound_ok ? -1.0 : 1.0;
                }});

  ps.push_back({"asym.monomial_predictions", 29, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const int n = rng.uniform_int(2, std::max(2, cfg.degree_max));
                  const double theta = draw_theta(rng), h = std::pow(10.0, rng.uniform(0.0, 2.0));
                  const int order = rng.uniform_int(0, 2);
                  d["n"] = n;
                  d["theta"] = theta;
                  d["h"] = h;
                  d["order"] = order;
                  if (sin_is_zero(theta) && n < 2) return -1.0;
                  const auto predicted = predict_roots(monic_head(Polynomial::monomial(static_cast<std::size_t>(n))), theta, h, order);
                  CotangentZeros z = qn_zeros(n, theta);
                  std::reverse(z.zeros.begin(), z.zeros.end());
                  double worst = 0.0;
                  for (std::size_t j = 0; j < predicted.size(); ++j)
                    worst = std::max(worst, std::abs(predicted[j] - h * z.zeros[j]));
                  return worst == 0.0 ? -1.0 : worst;
                }});

  ps.push_back({"asym.root_count", 30, 1.0, 0.0, [](Rng& rng, const SuiteConfig& cfg, Json& d) {
                  const int n = rng.uniform_int(1, cfg.degree_max);
                  const Polynomial p = random_real_poly(rng, n, false);
                  const double theta = draw_theta(rng), h = rng.uniform(0.5, 5.0);
                  d["p"] = to_json(p);
                  d["theta"] = theta;
                  d["h"] = h;
                  const auto actual = actual_roots(p, theta, h);
                  const std::size_t expected = qn_zeros(n, theta).count;
                  return actual.size() == expected ? -1.0 : 1.0;
                }});

  std::sort(ps.begin(), ps.end(), [](const Property& a, const Property& b) { return a.name < b.name; });
  return ps;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> ps = build_properties();
  return ps;
}

TrialOutcome run_trial(const Property& prop, std::uint64_t trial_seed, int trial, const SuiteConfig& cfg) {
  TrialOutcome out;
  Json detail = Json::object();
  Rng rng(trial_seed);
  double excess;
  try {
    excess = prop.trial(rng, cfg, detail);
  } catch (const Error& e) {
    detail["error"] = e.what();
    excess = std::numeric_limits<double>::infinity();
  }
  out.violation = excess;
  out.failed = !(excess <= 0.0);
  out.instance = Json{{"property", prop.name}, {"trial", trial}, {"seed", trial_seed}, {"detail", detail}};
  return out;
}

}  // namespace

void validate(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  if (cfg.degree_max < 2) throw Error(ErrorCode::kInvalidArgument, "degree_max must be at least 2");
  if (!(cfg.root_lo <= cfg.root_hi)) throw Error(ErrorCode::kInvalidArgument, "root range is empty");
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyRecord& r) { return r.passed(); });
}

HyperbolicSample random_hyperbolic_sample(int n, double lo, double hi, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be at least 1");
  HyperbolicSample s;
  s.roots.resize(static_cast<std::size_t>(n));
  for (auto& r : s.roots) r = rng.uniform(lo, hi);
  std::sort(s.roots.begin(), s.roots.end());
  s.poly = Polynomial::from_real_roots(s.roots);
  return s;
}

Polynomial random_hyperbolic(int n, double lo, double hi, Rng& rng) {
  return random_hyperbolic_sample(n, lo, hi, rng).poly;
}

Polynomial random_line_poly(int n, double c, double lo, double hi, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be at least 1");
  std::vector<Complex> zs(static_cast<std::size_t>(n));
  for (auto& z : zs) z = {rng.uniform(lo, hi), c};
  return Polynomial::from_roots(zs);
}

FDOperator random_preserver(Rng& rng, int max_half_order) {
  const Complex lambda{0.0, draw_beta(rng)};
  return preserver_with_shift(rng, lambda, max_half_order);
}

FDOperator random_strip_preserver(Rng& rng, int max_half_order) {
  const Complex lambda{0.0, draw_beta(rng)};
  const int m = rng.uniform_int(1, max_half_order);
  Polynomial g{std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * kPi))};
  for (int k = 0; k < 2 * m; ++k) g = multiply(g, Polynomial{-std::polar(1.0, rng.uniform(0.0, 2.0 * kPi)), 1.0});
  return from_generating(lambda, -m, g);
}

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : properties()) names.push_back(p.name);
  return names;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  SuiteReport report;
  report.seed = cfg.seed;
  for (const Property& prop : properties()) {
    PropertyRecord rec;
    rec.name = prop.name;
    rec.trials = std::max(1, static_cast<int>(std::lround(prop.weight * cfg.trials)));
    rec.tolerated = static_cast<int>(std::floor(prop.tolerated_fraction * rec.trials));
    rec.worst_violation = -std::numeric_limits<double>::infinity();
    const std::uint64_t stream_seed = derive_seed(cfg.seed, prop.stream);
    for (int t = 0; t < rec.trials; ++t) {
      const TrialOutcome o = run_trial(prop, derive_seed(stream_seed, static_cast<std::uint64_t>(t)), t, cfg);
      rec.worst_violation = std::isnan(o.violation) ? o.violation : std::max(rec.worst_violation, o.violation);
      if (o.failed) {
        ++rec.failures;
        if (!rec.example_failure) rec.example_failure = o.instance;
      }
    }
    report.properties.push_back(std::move(rec));
  }
  return report;
}

TrialOutcome replay(const Json& instance, const SuiteConfig& cfg) {
  if (!instance.is_object() || !instance.contains("property") || !instance.contains("seed"))
    throw ParseError("$", "failure instance needs \"property\" and \"seed\"");
  const auto name = instance.at("property").get<std::string>();
  const auto& ps = properties();
  const auto it = std::find_if(ps.begin(), ps.end(), [&](const Property& p) { return p.name == name; });
  if (it == ps.end()) throw ParseError("property", "unknown property " + name);
  const int trial = instance.value("trial", 0);
  return run_trial(*it, instance.at("seed").get<std::uint64_t>(), trial, cfg);
}

Json to_json(const SuiteReport& report) {
  Json props = Json::array();
  for (const auto& r : report.properties) {
    props.push_back(Json{{"name", r.name},
                         {"trials", r.trials},
                         {"failures", r.failures},
                         {"tolerated", r.tolerated},
                         {"passed", r.passed()},
                         {"worst_violation", std::isfinite(r.worst_violation) ? Json(r.worst_violation) : Json(nullptr)},
                         {"example_failure", r.example_failure ? *r.example_failure : Json(nullptr)}});
  }
  return Json{{"seed", report.seed}, {"passed", report.passed()}, {"properties", props}};
}

}  // namespace fdzeros
