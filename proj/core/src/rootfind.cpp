#include "fdzeros/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fdzeros/random.hpp"

namespace fdzeros {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Newton {
  Complex value;
  Complex ratio;  // p / p'
  double bound;   // sum |c_k| |z|^k
};

// Evaluates p and the Newton correction at z. For |z| > 1 the reversed polynomial is
// evaluated at 1/z so that large roots never overflow.
Newton newton_step(std::span<const Complex> c, Complex z) {
  const std::size_t n = c.size() - 1;
  Newton out{};
  if (std::abs(z) <= 1.0) {
    Complex p{}, dp{};
    double b = 0.0;
    const double az = std::abs(z);
    for (std::size_t k = n + 1; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
      b = b * az + std::abs(c[k]);
    }
    out.value = p;
    out.bound = b;
    out.ratio = dp == Complex{} ? Complex{std::numeric_limits<double>::infinity()} : p / dp;
    return out;
  }
  const Complex y = 1.0 / z;
  const double ay = std::abs(y);
  Complex r{}, dr{};
  double b = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    dr = dr * y + r;
    r = r * y + c[k];
    b = b * ay + std::abs(c[k]);
  }
  // p(z) = z^n r(y), p'(z)/p(z) = (n - y r'(y)/r(y)) / z
  const double zn = std::pow(std::abs(z), static_cast<double>(n));
  out.value = r * std::pow(z, static_cast<double>(n));
  out.bound = b * zn;
  if (r == Complex{}) {
    out.ratio = Complex{};
  } else {
    const Complex denom = static_cast<double>(n) - y * dr / r;
    out.ratio = denom == Complex{} ? Complex{std::numeric_limits<double>::infinity()} : z / denom;
  }
  return out;
}

// Starting points on circles with radii read off the upper convex hull of
// (k, log|c_k|), one circle per hull edge.
std::vector<Complex> initial_guesses(std::span<const Complex> c) {
  const std::size_t n = c.size() - 1;
  std::vector<double> logs(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    logs[k] = c[k] == Complex{} ? -std::numeric_limits<double>::infinity() : std::log(std::abs(c[k]));

  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (std::isinf(logs[k])) continue;
    while (hull.size() >= 2) {
      const std::size_t i = hull[hull.size() - 2];
      const std::size_t j = hull.back();
      const double cross = (logs[j] - logs[i]) * static_cast<double>(k - i) -
                           (logs[k] - logs[i]) * static_cast<double>(j - i);
      if (cross <= 0.0) hull.pop_back(); else break;
    }
    hull.push_back(k);
  }

  constexpr double kSigma = 0.7;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> z;
  z.reserve(n);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const std::size_t lo = hull[e], hi = hull[e + 1];
    const std::size_t count = hi - lo;
    const double radius = std::exp((logs[lo] - logs[hi]) / static_cast<double>(count));
    for (std::size_t i = 0; i < count; ++i) {
      const double angle = two_pi * static_cast<double>(i) / static_cast<double>(count) +
                           two_pi * static_cast<double>(lo) / static_cast<double>(n) + kSigma;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

double diameter(const std::vector<Complex>& z, const std::vector<std::size_t>& idx) {
  double d = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) d = std::max(d, std::abs(z[idx[a]] - z[idx[b]]));
  return d;
}

// Single-link components of idx at the given relative radius.
std::vector<std::vector<std::size_t>> components(const std::vector<Complex>& z, const std::vector<std::size_t>& idx,
                                                 double radius) {
  std::vector<std::size_t> label(idx.size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
  auto find = [&](std::size_t i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (std::abs(z[idx[a]] - z[idx[b]]) <= radius * std::max(1.0, std::abs(z[idx[a]])))
        label[find(a)] = find(b);
  std::vector<std::vector<std::size_t>> out(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) out[find(a)].push_back(idx[a]);
  std::erase_if(out, [](const auto& c) { return c.empty(); });
  return out;
}

// Newton on P^(m-1), where an m-fold root of P is simple, started from the cluster mean.
Complex polish_multiple(std::span<const Complex> c, std::size_t m, Complex start, double reach) {
  Polynomial d(std::vector<Complex>(c.begin(), c.end()));
  for (std::size_t k = 1; k < m; ++k) d = derivative(d);
  Complex x = start;
  for (int it = 0; it < 20; ++it) {
    const Newton nt = newton_step(d.coeffs(), x);
    if (nt.value == Complex{} || std::isinf(std::abs(nt.ratio))) break;
    x -= nt.ratio;
    if (std::abs(nt.ratio) <= 4.0 * kEps * std::max(1.0, std::abs(x))) break;
  }
  return std::abs(x - start) <= reach ? x : start;
}

// An m-fold root is only resolved to about eps^(1/m). A group of m iterates whose
// diameter is within 100 eps^(1/m) of the mean's magnitude is replaced by m copies of
// one polished point; wider groups are split at a smaller radius.
void merge_multiple_roots(std::span<const Complex> c, std::vector<Complex>& z, const std::vector<std::size_t>& idx,
                          double radius) {
  constexpr double kFloor = 100.0 * 1.4901161193847656e-08;  // 100 sqrt(eps)
  for (const auto& group : components(z, idx, radius)) {
    if (group.size() < 2) continue;
    const double m = static_cast<double>(group.size());
    Complex mean{};
    for (const std::size_t i : group) mean += z[i];
    mean /= m;
    const double spread = diameter(z, group);
    if (spread <= 100.0 * std::pow(kEps, 1.0 / m) * std::max(1.0, std::abs(mean))) {
      const Complex root = polish_multiple(c, group.size(), mean, spread);
      for (const std::size_t i : group) z[i] = root;
    } else if (radius > kFloor) {
      merge_multiple_roots(c, z, group, radius / 2.0);
    }
  }
}

}  // namespace

RootSet roots(const Polynomial& p, const RootFinderConfig& cfg) {
  const auto deg = p.degree();
  if (!deg) throw Error(ErrorCode::kZeroPolynomial, "cannot compute roots of the zero polynomial");
  if (*deg == 0) throw Error(ErrorCode::kConstantPolynomial, "constant polynomial has no roots");

  RootSet rs;
  rs.scale = p.max_abs_coeff();

  // Exact zero roots are factored out before iterating.
  std::size_t zeros = 0;
  while (p.coeffs()[zeros] == Complex{}) ++zeros;
  const std::span<const Complex> c = p.coeffs().subspan(zeros);
  const std::size_t n = c.size() - 1;

  std::vector<Complex> z;
  if (n == 1) {
    z.push_back(-c[0] / c[1]);
  } else if (n > 1) {
    z = initial_guesses(c);
    const double stop = 2.0 * static_cast<double>(n) * kEps;
    // Every root keeps moving until all of them pass the backward-error test and the
    // largest relative correction has stopped shrinking.
    int settled_sweeps = 0;
    double previous_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < cfg.max_iter; ++it) {
      bool all_small = true;
      double largest_step = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Newton nt = newton_step(c, z[i]);
        if (nt.value == Complex{}) continue;
        if (!(std::abs(nt.value) <= stop * nt.bound)) all_small = false;
        Complex sum{};
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) sum += 1.0 / (z[i] - z[j]);
        Complex step;
        if (std::isinf(std::abs(nt.ratio))) {
          step = Complex{std::abs(z[i]) * 1e-3 + 1e-3, 0.0};  // stationary point; nudge
        } else {
          const Complex denom = 1.0 - nt.ratio * sum;
          step = denom == Complex{} ? nt.ratio : nt.ratio / denom;
        }
        z[i] -= step;
        largest_step = std::max(largest_step, std::abs(step) / std::max(std::abs(z[i]), kEps));
      }
      if (!all_small) {
        settled_sweeps = 0;
        previous_step = std::numeric_limits<double>::infinity();
        continue;
      }
      if (largest_step <= 4.0 * kEps) break;
      if (largest_step < previous_step) {
        previous_step = largest_step;
        settled_sweeps = 0;
      } else if (++settled_sweeps >= 5) {
        break;
      }
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    merge_multiple_roots(c, z, all, 1e-2);
  }
  z.insert(z.begin(), zeros, Complex{});

  rs.roots = std::move(z);
  rs.residuals.reserve(rs.roots.size());
  bool ok = true;
  for (const Complex r : rs.roots) {
    const Newton nt = newton_step(p.coeffs(), r);
    const double res = std::abs(evaluate(p, r));
    rs.residuals.push_back(res);
    if (!(std::abs(nt.value) <= cfg.tol * nt.bound)) ok = false;
  }
  if (!ok) throw NonConvergence("Aberth iteration did not reach the residual threshold", rs);
  return rs;
}

RootSet root_set_from(const Polynomial& p, std::vector<Complex> known_roots) {
  RootSet rs;
  rs.scale = p.max_abs_coeff();
  rs.residuals.reserve(known_roots.size());
  for (const Complex r : known_roots) rs.residuals.push_back(std::abs(evaluate(p, r)));
  rs.roots = std::move(known_roots);
  return rs;
}

RealnessVerdict classify_real(const RootSet& rs, double tol) {
  RealnessVerdict v;
  double magnitude = 0.0;
  for (const Complex r : rs.roots) {
    v.max_imag = std::max(v.max_imag, std::abs(r.imag()));
    magnitude = std::max(magnitude, std::abs(r));
  }
  v.tol_used = tol;
  v.is_real_rooted = v.max_imag <= tol * std::max(1.0, magnitude);
  return v;
}

std::vector<double> sorted_real_parts(const RootSet& rs) {
  std::vector<double> x;
  x.reserve(rs.roots.size());
  for (const Complex r : rs.roots) x.push_back(r.real());
  std::sort(x.begin(), x.end());
  return x;
}

double mesh(const RootSet& rs, double tol) {
  if (rs.roots.size() < 2) throw Error(ErrorCode::kTooFewRoots, "mesh needs at least two roots");
  if (const auto v = classify_real(rs, tol); !v.is_real_rooted)
    throw Error(ErrorCode::kNotRealRooted, "mesh of a non-real-rooted set");
  const auto x = sorted_real_parts(rs);
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < x.size(); ++i) m = std::min(m, x[i] - x[i - 1]);
  return m;
}

Extremes extremes(const RootSet& rs, double tol) {
  if (rs.roots.empty()) throw Error(ErrorCode::kTooFewRoots, "extremes of an empty root set");
  if (const auto v = classify_real(rs, tol); !v.is_real_rooted)
    throw Error(ErrorCode::kNotRealRooted, "extremes of a non-real-rooted set");
  const auto x = sorted_real_parts(rs);
  return {x.back(), x.front()};
}

bool interlace_sorted(std::span<const double> a, std::span<const double> b, double slack) {
  // Merged order must be a0 <= b0 <= a1 <= b1 <= ...
  const std::size_t total = a.size() + b.size();
  auto at = [&](std::size_t i) { return i % 2 == 0 ? a[i / 2] : b[i / 2]; };
  for (std::size_t i = 1; i < total; ++i)
    if (at(i - 1) > at(i) + slack) return false;
  return true;
}

bool interlace(const Polynomial& p, const Polynomial& q, double tol, const RootFinderConfig& cfg) {
  const auto dp = p.degree(), dq = q.degree();
  if (!dp || !dq) throw Error(ErrorCode::kZeroPolynomial, "interlace of the zero polynomial");
  const std::size_t hi = std::max(*dp, *dq), lo = std::min(*dp, *dq);
  if (hi - lo > 1) throw Error(ErrorCode::kDegreeGapTooLarge, "degrees differ by more than one");

  auto real_roots = [&](const Polynomial& f) -> RootSet {
    if (f.degree() == 0u) return {};
    RootSet rs = roots(f, cfg);
    if (!classify_real(rs, tol).is_real_rooted)
      throw Error(ErrorCode::kNotRealRooted, "interlace input is not real-rooted");
    return rs;
  };
  const RootSet rp = real_roots(p), rq = real_roots(q);
  const auto xp = sorted_real_parts(rp), xq = sorted_real_parts(rq);

  double magnitude = 1.0;
  for (const double v : xp) magnitude = std::max(magnitude, std::abs(v));
  for (const double v : xq) magnitude = std::max(magnitude, std::abs(v));
  const double slack = tol * magnitude;

  if (xp.size() == xq.size()) return interlace_sorted(xp, xq, slack) || interlace_sorted(xq, xp, slack);
  return xp.size() > xq.size() ? interlace_sorted(xp, xq, slack) : interlace_sorted(xq, xp, slack);
}

bool pencil_hyperbolic_sample(const Polynomial& p, const Polynomial& q, int n_samples,
                              std::uint64_t seed, double tol, const RootFinderConfig& cfg) {
  if (!p.degree() || !q.degree() || *p.degree() != *q.degree() || *p.degree() < 1)
    throw Error(ErrorCode::kInvalidArgument, "pencil needs two polynomials of equal degree >= 1");
  Rng rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const std::pair<Complex, Polynomial> terms[] = {{std::cos(phi), p}, {std::sin(phi), q}};
    const Polynomial member = linear_combine(terms, 1e-12);
    if (!member.degree() || *member.degree() == 0) continue;
    if (!classify_real(roots(member, cfg), tol).is_real_rooted) return false;
  }
  return true;
}

double matched_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  auto by_real = [](Complex x, Complex y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  };
  std::vector<Complex> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), by_real);
  std::sort(sb.begin(), sb.end(), by_real);
  std::vector<bool> used(sb.size(), false);
  double worst = 0.0;
  for (const Complex x : sa) {
    std::size_t best = sb.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - sb[j]);
      if (d < best_d) best_d = d, best = j;
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace fdzeros
