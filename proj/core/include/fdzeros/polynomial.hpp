#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense complex-coefficient polynomials.
 *
 * Coefficients are stored in ascending order of power, so coeffs()[k]
 * multiplies x^k. The zero polynomial has no stored coefficients and no
 * degree. Every operation is pure and returns a new value.
 */

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fdzeros {

using Complex = std::complex<double>;

class Polynomial {
 public:
  Polynomial() = default;

  /// Trailing coefficients equal to exactly zero are dropped.
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial monomial(std::size_t n, Complex coeff = 1.0);

  /// Monic-times-`leading` product of (x - r) over `roots`.
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);
  static Polynomial from_real_roots(std::span<const double> roots, double leading = 1.0);

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;

  Complex coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  /// max_k |coeffs[k]|, or 0 for the zero polynomial.
  double max_abs_coeff() const noexcept;

  Complex operator()(Complex z) const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

Polynomial make_poly(std::vector<Complex> coeffs);

/// Horner evaluation.
Complex evaluate(const Polynomial& p, Complex z) noexcept;

/// Value and first derivative in one Horner pass.
std::pair<Complex, Complex> evaluate_with_derivative(const Polynomial& p, Complex z) noexcept;

/// Coefficients of P(x - lambda), computed by repeated synthetic division.
Polynomial shift_arg(const Polynomial& p, Complex lambda);

Polynomial derivative(const Polynomial& p);

/// k-th derivative; zero polynomial once k exceeds the degree.
Polynomial derivative(const Polynomial& p, std::size_t k);

/// Sum of scalar * polynomial. When `trim_tol` is given, leading coefficients with
/// magnitude <= trim_tol * (largest coefficient magnitude) are removed.
Polynomial linear_combine(std::span<const std::pair<Complex, Polynomial>> terms,
                          std::optional<double> trim_tol = std::nullopt);

Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// P(-x).
Polynomial reflect(const Polynomial& p);

/// P(s * x).
Polynomial scale_arg(const Polynomial& p, Complex s);

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(Complex s, const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);

struct RealCoeffReport {
  bool is_real = true;
  double max_imag = 0.0;
};

/// True iff max_k |Im c_k| <= tol * max(1, max_k |c_k|).
RealCoeffReport is_real_coeffs(const Polynomial& p, double tol);

/// Drops imaginary parts of every coefficient.
Polynomial real_part(const Polynomial& p);

/// max_k |p_k - q_k| / max(max |p_k|, max |q_k|); 0 when both are zero.
double relative_coeff_distance(const Polynomial& p, const Polynomial& q);

}  // namespace fdzeros
