#include "fdzeros/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fdzeros/debruijn.hpp"

namespace fdzeros {

namespace {
constexpr double kRoundoffResidual = 1e-12;
}  // namespace

MonicHead monic_head(const Polynomial& p) {
  if (!p.degree() || *p.degree() < 2)
    throw Error(ErrorCode::kDegreeTooSmall, "asymptotic formulas need degree >= 2");
  MonicHead head;
  head.n = static_cast<int>(*p.degree());
  head.full = (1.0 / p.leading()) * p;
  const auto n = static_cast<std::size_t>(head.n);
  head.a = head.full.coeff(n - 1);
  head.b = head.full.coeff(n - 2);
  head.c = n >= 3 ? head.full.coeff(n - 3) : Complex{};
  return head;
}

std::vector<Complex> predict_roots(const MonicHead& head, double theta, double h, int order) {
  if (head.n < 2) throw Error(ErrorCode::kDegreeTooSmall, "asymptotic formulas need degree >= 2");
  if (order < 0 || order > 2) throw Error(ErrorCode::kInvalidArgument, "order must be 0, 1 or 2");
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidArgument, "h must be positive");

  const int n = head.n;
  const double nd = n;
  CotangentZeros z = qn_zeros(n, theta);
  if (z.count == 0) throw Error(ErrorCode::kTooFewRoots, "Q_n has no zeros");
  std::reverse(z.zeros.begin(), z.zeros.end());

  const Polynomial q1 = qn(n - 1, theta);
  const Polynomial q2 = qn(n - 2, theta);
  const Polynomial q3 = n >= 3 ? qn(n - 3, theta) : Polynomial{};
  const double floor = 1e-10 * q1.max_abs_coeff();

  const Complex a = head.a, b = head.b, c = head.c;
  const Complex first = a * a * (nd - 1.0) / (2.0 * nd * nd) - b / nd;
  const Complex second =
      -a * a * a * (nd - 1.0) * (nd - 2.0) / (3.0 * nd * nd * nd) + a * b * (nd - 2.0) / (nd * nd) - c / nd;

  std::vector<Complex> out;
  out.reserve(z.count);
  for (const double x : z.zeros) {
    Complex X = x * h - a / nd;
    if (order >= 1) {
      const Complex denom = evaluate(q1, x);
      if (!(std::abs(denom) > floor))
        throw Error(ErrorCode::kDegenerateQ, "Q_{n-1} vanishes at a zero of Q_n");
      X += first * evaluate(q2, x) / denom / h;
      if (order >= 2) X += second * evaluate(q3, x) / denom / (h * h);
    }
    out.push_back(X);
  }
  return out;
}

std::vector<Complex> actual_roots(const Polynomial& p, double theta, double h, const RootFinderConfig& cfg) {
  const Polynomial image = apply_tb(DeBruijnOp(theta, h), p);
  if (!image.degree() || *image.degree() == 0) return {};
  std::vector<Complex> r = roots(image, cfg).roots;
  std::sort(r.begin(), r.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
  return r;
}

double matching_floor(const Polynomial& p, const RootFinderConfig& cfg) {
  double m = 0.0;
  if (p.degree() && *p.degree() >= 1)
    for (const Complex r : roots(p, cfg).roots) m = std::max(m, std::abs(r));
  return 2.0 * (1.0 + m);
}

AsymptoticReport residual_sweep(const Polynomial& p, double theta, const SweepConfig& sweep,
                                const RootFinderConfig& cfg) {
  if (sweep.steps < 1) throw Error(ErrorCode::kInvalidArgument, "steps must be at least 1");
  if (!(sweep.h_min > 0.0) || !(sweep.h_max >= sweep.h_min))
    throw Error(ErrorCode::kInvalidArgument, "need 0 < h_min <= h_max");
  const MonicHead head = monic_head(p);
  if (sweep.enforce_floor) {
    const double floor = matching_floor(head.full, cfg);
    if (sweep.h_min < floor)
      throw Error(ErrorCode::kInvalidArgument,
                  "h_min is below the matching floor 2(1 + max|root|) = " + std::to_string(floor));
  }

  AsymptoticReport rep;
  rep.theta = theta;
  rep.order = sweep.order;
  rep.conditioning_warning = near_degenerate(theta);
  for (int s = 0; s < sweep.steps; ++s) {
    const double t = sweep.steps == 1 ? 0.0 : static_cast<double>(s) / (sweep.steps - 1);
    rep.h_grid.push_back(sweep.h_min * std::pow(sweep.h_max / sweep.h_min, t));
  }

  const double power = sweep.order + 1;
  // per-h worst scaled residual over records resolvable above roundoff; NaN when none are
  std::vector<double> worst_scaled;
  for (const double h : rep.h_grid) {
    const std::vector<Complex> predicted = predict_roots(head, theta, h, sweep.order);
    const std::vector<Complex> actual = actual_roots(head.full, theta, h, cfg);
    if (actual.size() != predicted.size())
      throw Error(ErrorCode::kMatchAmbiguity, "actual and predicted zero counts differ");
    for (std::size_t j = 1; j < actual.size(); ++j)
      if (actual[j].real() - actual[j - 1].real() < 1e-6 * h)
        throw Error(ErrorCode::kMatchAmbiguity, "two zeros too close to order by real part");
    double worst = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = 0; j < actual.size(); ++j) {
      AsymptoticRecord r;
      r.h = h;
      r.j = static_cast<int>(j) + 1;
      r.actual = actual[j];
      r.predicted = predicted[j];
      r.residual = std::abs(actual[j] - predicted[j]);
      r.scaled_residual = r.residual * std::pow(h, power);
      if (r.residual > kRoundoffResidual * std::max(1.0, std::abs(actual[j])))
        worst = std::isnan(worst) ? r.scaled_residual : std::max(worst, r.scaled_residual);
      rep.records.push_back(r);
    }
    worst_scaled.push_back(worst);
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& r : rep.records) {
    if (!(r.residual > 0.0)) continue;
    const double x = std::log(r.h), y = std::log(r.residual);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++count;
  }
  const double denom = count * sxx - sx * sx;
  rep.fitted_decay = count >= 2 && denom > 0.0 ? (count * sxy - sx * sy) / denom
                                              : std::numeric_limits<double>::quiet_NaN();

  // Boundedness is judged on the upper half of the grid: a scaled residual that decays
  // (faster convergence than the guaranteed order) must not count as unbounded.
  std::vector<double> resolved;
  for (const double w : worst_scaled)
    if (!std::isnan(w)) resolved.push_back(w);
  double upper_max = 0.0;
  for (std::size_t i = worst_scaled.size() / 2; i < worst_scaled.size(); ++i)
    if (!std::isnan(worst_scaled[i])) upper_max = std::max(upper_max, worst_scaled[i]);
  if (resolved.empty()) {
    rep.omega_bound_ok = true;
  } else {
    std::sort(resolved.begin(), resolved.end());
    const std::size_t m = resolved.size();
    const double median = m % 2 == 1 ? resolved[m / 2] : 0.5 * (resolved[m / 2 - 1] + resolved[m / 2]);
    rep.omega_bound_ok = upper_max <= 10.0 * median;
  }
  return rep;
}

}  // namespace fdzeros
