#include "fdzeros/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace fdzeros {

namespace {

void trim_exact_zeros(std::vector<Complex>& c) {
  while (!c.empty() && c.back() == Complex{}) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim_exact_zeros(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::monomial(std::size_t n, Complex coeff) {
  std::vector<Complex> c(n + 1);
  c[n] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  c.reserve(roots.size() + 1);
  for (const Complex r : roots) {
    // multiply by (x - r)
    c.push_back(Complex{});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_real_roots(std::span<const double> roots, double leading) {
  std::vector<Complex> r(roots.begin(), roots.end());
  return from_roots(r, leading);
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const Complex c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex z) const noexcept { return evaluate(*this, z); }

Polynomial make_poly(std::vector<Complex> coeffs) { return Polynomial(std::move(coeffs)); }

Complex evaluate(const Polynomial& p, Complex z) noexcept {
  const auto c = p.coeffs();
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> evaluate_with_derivative(const Polynomial& p, Complex z) noexcept {
  const auto c = p.coeffs();
  Complex value{};
  Complex slope{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
  return {value, slope};
}

Polynomial shift_arg(const Polynomial& p, Complex lambda) {
  if (p.is_zero() || lambda == Complex{}) return p;
  // Synthetic division by (y - s) repeatedly gives the Taylor coefficients of P about s,
  // i.e. the coefficients of P(y + s). P(x - lambda) is the case s = -lambda.
  const Complex s = -lambda;
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = c.size() - 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = n; i-- > k;) c[i] += s * c[i + 1];
  return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(d));
}

Polynomial derivative(const Polynomial& p, std::size_t k) {
  Polynomial out = p;
  for (std::size_t i = 0; i < k && !out.is_zero(); ++i) out = derivative(out);
  return out;
}

Polynomial linear_combine(std::span<const std::pair<Complex, Polynomial>> terms,
                          std::optional<double> trim_tol) {
  std::size_t len = 0;
  for (const auto& [s, q] : terms) len = std::max(len, q.size());
  std::vector<Complex> c(len);
  for (const auto& [s, q] : terms) {
    const auto qc = q.coeffs();
    for (std::size_t k = 0; k < qc.size(); ++k) c[k] += s * qc[k];
  }
  if (trim_tol) {
    double scale = 0.0;
    for (const Complex v : c) scale = std::max(scale, std::abs(v));
    while (!c.empty() && std::abs(c.back()) <= *trim_tol * scale) c.pop_back();
  }
  return Polynomial(std::move(c));
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<Complex> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return Polynomial(std::move(c));
}

Polynomial reflect(const Polynomial& p) { return scale_arg(p, -1.0); }

Polynomial scale_arg(const Polynomial& p, Complex s) {
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  Complex power = 1.0;
  for (auto& v : c) {
    v *= power;
    power *= s;
  }
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  const std::pair<Complex, Polynomial> terms[] = {{1.0, p}, {1.0, q}};
  return linear_combine(terms);
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  const std::pair<Complex, Polynomial> terms[] = {{1.0, p}, {-1.0, q}};
  return linear_combine(terms);
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }

RealCoeffReport is_real_coeffs(const Polynomial& p, double tol) {
  RealCoeffReport r;
  for (const Complex c : p.coeffs()) r.max_imag = std::max(r.max_imag, std::abs(c.imag()));
  r.is_real = r.max_imag <= tol * std::max(1.0, p.max_abs_coeff());
  return r;
}

Polynomial real_part(const Polynomial& p) {
  std::vector<Complex> c;
  c.reserve(p.size());
  for (const Complex v : p.coeffs()) c.emplace_back(v.real(), 0.0);
  return Polynomial(std::move(c));
}

double relative_coeff_distance(const Polynomial& p, const Polynomial& q) {
  const double scale = std::max(p.max_abs_coeff(), q.max_abs_coeff());
  if (scale == 0.0) return 0.0;
  double diff = 0.0;
  const std::size_t len = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < len; ++k) diff = std::max(diff, std::abs(p.coeff(k) - q.coeff(k)));
  return diff / scale;
}

}  // namespace fdzeros
