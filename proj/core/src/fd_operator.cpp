#include "fdzeros/fd_operator.hpp"

#include <algorithm>
#include <cmath>

namespace fdzeros {

FDOperator::FDOperator(Complex lambda, std::map<int, Complex> terms)
    : lambda_(lambda), terms_(std::move(terms)) {
  if (lambda_ == Complex{}) throw Error(ErrorCode::kInvalidArgument, "lambda must be nonzero");
  if (terms_.size() < 2 || terms_.begin()->first == terms_.rbegin()->first)
    throw Error(ErrorCode::kInvalidArgument, "operator needs indices l < m");
  if (terms_.begin()->second == Complex{})
    throw Error(ErrorCode::kInvalidArgument, "coefficient a_l at the lowest index is zero");
  if (terms_.rbegin()->second == Complex{})
    throw Error(ErrorCode::kInvalidArgument, "coefficient a_m at the highest index is zero");
}

Complex FDOperator::coeff(int j) const noexcept {
  const auto it = terms_.find(j);
  return it == terms_.end() ? Complex{} : it->second;
}

GeneratingFn generating_fn(const FDOperator& op) {
  std::vector<Complex> c(static_cast<std::size_t>(op.high() - op.low()) + 1);
  for (const auto& [j, a] : op.terms()) c[static_cast<std::size_t>(j - op.low())] = a;
  return {op.low(), Polynomial(std::move(c))};
}

FDOperator from_generating(Complex lambda, int low, const Polynomial& poly) {
  std::map<int, Complex> terms;
  const auto c = poly.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != Complex{}) terms[low + static_cast<int>(k)] = c[k];
  return FDOperator(lambda, std::move(terms));
}

FDOperator compose(const FDOperator& outer, const FDOperator& inner) {
  if (outer.lambda() != inner.lambda())
    throw Error(ErrorCode::kInvalidArgument, "composition requires equal shifts");
  const GeneratingFn a = generating_fn(outer), b = generating_fn(inner);
  return from_generating(outer.lambda(), a.laurent_low + b.laurent_low, multiply(a.poly, b.poly));
}

Polynomial apply(const FDOperator& op, const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<std::pair<Complex, Polynomial>> terms;
  terms.reserve(op.terms().size());
  for (const auto& [j, a] : op.terms())
    terms.emplace_back(a, shift_arg(p, static_cast<double>(j) * op.lambda()));
  return linear_combine(terms);
}

namespace {

// Mean modulus deviation per cluster of nearly coincident roots. Numerically split
// multiple roots scatter by eps^(1/k); their centroid keeps full accuracy.
double max_cluster_modulus_deviation(const std::vector<Complex>& r) {
  constexpr double kRadius = 1e-4;
  const std::size_t n = r.size();
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  auto find = [&](std::size_t i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(r[i] - r[j]) <= kRadius * std::max(1.0, std::abs(r[i]))) label[find(i)] = find(j);

  std::map<std::size_t, std::pair<Complex, int>> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    auto& [sum, count] = clusters[find(i)];
    sum += r[i];
    ++count;
  }
  double worst = 0.0;
  for (const auto& [id, acc] : clusters)
    worst = std::max(worst, std::abs(std::abs(acc.first / static_cast<double>(acc.second)) - 1.0));
  return worst;
}

}  // namespace

OperatorVerdict analyze(const FDOperator& op, double tol, const RootFinderConfig& cfg) {
  OperatorVerdict v;
  v.re_lambda_abs = std::abs(op.lambda().real());
  v.cond1_pure_imag_shift = v.re_lambda_abs <= tol * std::abs(op.lambda());
  v.cond2_symmetric_support = op.low() == -op.high();

  v.generating_roots = roots(generating_fn(op).poly, cfg).roots;
  v.max_modulus_deviation = max_cluster_modulus_deviation(v.generating_roots);
  v.cond3_unimodular_roots = v.max_modulus_deviation <= tol;

  v.extreme_product = op.coeff(-op.high()) * op.coeff(op.high());
  const double mag = std::abs(v.extreme_product);
  v.cond4_positive_product =
      mag > 0.0 && std::abs(v.extreme_product.imag()) <= tol * mag && v.extreme_product.real() > 0.0;

  v.strip_preserver = v.cond1_pure_imag_shift && v.cond2_symmetric_support && v.cond3_unimodular_roots;
  v.hyperbolicity_preserver = v.strip_preserver && v.cond4_positive_product;
  return v;
}

std::optional<Witness> witness_search(const FDOperator& op, const WitnessBudget& budget,
                                      const RootFinderConfig& cfg) {
  const OperatorVerdict verdict = analyze(op, budget.tol, cfg);
  const bool strip_mode = budget.strip_b.has_value();
  if (strip_mode ? verdict.strip_preserver : verdict.hyperbolicity_preserver) return std::nullopt;

  auto offense_of = [&](const RootSet& rs) {
    double magnitude = 1.0, worst = 0.0;
    for (const Complex r : rs.roots) {
      magnitude = std::max(magnitude, std::abs(r));
      const double off = strip_mode ? std::abs(r.imag()) - *budget.strip_b : std::abs(r.imag());
      worst = std::max(worst, off);
    }
    return std::pair{worst, 10.0 * budget.tol * magnitude};
  };

  std::vector<Complex> centers;
  if (strip_mode) {
    centers = {Complex{0.0, *budget.strip_b}, Complex{0.0, -*budget.strip_b},
               Complex{0.5, *budget.strip_b}, Complex{0.5, -*budget.strip_b}};
  } else {
    centers = {Complex{0.0}, Complex{0.5}, Complex{-0.5}};
  }

  for (int n = 1; n <= budget.max_degree; ++n) {
    for (const Complex s : centers) {
      const std::vector<Complex> repeated(static_cast<std::size_t>(n), s);
      const Polynomial input = Polynomial::from_roots(repeated);
      const Polynomial image = apply(op, input);
      if (!image.degree() || *image.degree() == 0) continue;
      RootSet rs;
      try {
        rs = roots(image, cfg);
      } catch (const NonConvergence& e) {
        rs = e.best();
      }
      const auto [offense, threshold] = offense_of(rs);
      if (offense > threshold) return Witness{input, std::move(rs), offense};
    }
  }
  return std::nullopt;
}

}  // namespace fdzeros
