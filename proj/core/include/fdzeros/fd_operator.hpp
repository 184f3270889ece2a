#pragma once

/**
 * @file fd_operator.hpp
 * @brief Finite-difference operators T(P)(x) = sum_j a_j P(x - j*lambda) with constant
 *        coefficients, their generating Laurent polynomials, and the verdict engine that
 *        decides whether T preserves real-rootedness or a horizontal strip.
 */

#include <map>
#include <optional>
#include <vector>

#include "fdzeros/polynomial.hpp"
#include "fdzeros/rootfind.hpp"

namespace fdzeros {

class FDOperator {
 public:
  /// Throws InvalidArgument unless lambda != 0, there are at least two indices, and the
  /// coefficients at the lowest and highest index are nonzero.
  FDOperator(Complex lambda, std::map<int, Complex> terms);

  Complex lambda() const noexcept { return lambda_; }
  const std::map<int, Complex>& terms() const noexcept { return terms_; }
  int low() const noexcept { return terms_.begin()->first; }
  int high() const noexcept { return terms_.rbegin()->first; }
  Complex coeff(int j) const noexcept;

 private:
  Complex lambda_;
  std::map<int, Complex> terms_;
};

/// Q(t) = sum_j a_j t^j stored as t^{-low} Q(t).
struct GeneratingFn {
  int laurent_low = 0;
  Polynomial poly;
};

GeneratingFn generating_fn(const FDOperator& op);

/// Operator with shift `lambda` whose generating function is t^{low} * poly.
FDOperator from_generating(Complex lambda, int low, const Polynomial& poly);

/// Operator whose generating function is the product of both; the shifts must agree.
FDOperator compose(const FDOperator& outer, const FDOperator& inner);

Polynomial apply(const FDOperator& op, const Polynomial& p);

struct OperatorVerdict {
  bool cond1_pure_imag_shift = false;
  double re_lambda_abs = 0.0;
  bool cond2_symmetric_support = false;
  bool cond3_unimodular_roots = false;
  double max_modulus_deviation = 0.0;
  bool cond4_positive_product = false;
  /// a_{-m} * a_m with m the highest index (0 when -m carries no term).
  Complex extreme_product;
  bool hyperbolicity_preserver = false;
  bool strip_preserver = false;
  std::vector<Complex> generating_roots;
};

/// Conditions:
///  1. |Re lambda| <= tol |lambda|
///  2. lowest index == -highest index
///  3. every generating root t has ||t| - 1| <= tol
///  4. a_{-m} a_m is real (|Im| <= tol |a_{-m} a_m|) and positive
/// hyperbolicity_preserver = 1 && 2 && 3 && 4, strip_preserver = 1 && 2 && 3.
OperatorVerdict analyze(const FDOperator& op, double tol = kDefaultRealTol,
                        const RootFinderConfig& cfg = {});

struct WitnessBudget {
  int max_degree = 24;
  /// When set, search for a strip violation of |Im z| <= strip_b instead.
  std::optional<double> strip_b;
  double tol = kDefaultRealTol;
};

struct Witness {
  Polynomial input;
  RootSet image_roots;
  /// Largest |Im| of an image root, or in strip mode the largest |Im| - b.
  double offense = 0.0;
};

/// Searches x^n and (x - s)^n, n <= max_degree, for an input whose image leaves the real
/// line (or, in strip mode, polynomials with zeros on Im z = +-b whose image leaves the
/// strip). Returns nothing for operators analyze() accepts, and nothing when the search
/// is inconclusive.
std::optional<Witness> witness_search(const FDOperator& op, const WitnessBudget& budget = {},
                                      const RootFinderConfig& cfg = {});

}  // namespace fdzeros
