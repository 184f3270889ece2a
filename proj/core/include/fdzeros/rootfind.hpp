#pragma once

/**
 * @file rootfind.hpp
 * @brief Simultaneous root computation and the root-set predicates used to state
 *        zero-location results: realness, mesh, extremal roots, interlacing.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "fdzeros/errors.hpp"
#include "fdzeros/polynomial.hpp"

namespace fdzeros {

inline constexpr double kDefaultRealTol = 1e-8;

struct RootFinderConfig {
  int max_iter = 500;
  /// Accept a root when |P(z)| <= tol * sum_k |c_k| |z|^k (relative backward error).
  double tol = 1e-11;
};

struct RootSet {
  std::vector<Complex> roots;
  /// Largest coefficient magnitude of the source polynomial.
  double scale = 0.0;
  /// |P(root)| per root.
  std::vector<double> residuals;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, RootSet best)
      : Error(ErrorCode::kNonConvergence, what), best_(std::move(best)) {}

  const RootSet& best() const noexcept { return best_; }

 private:
  RootSet best_;
};

/// All deg(P) roots by Aberth-Ehrlich iteration. Starting points sit on circles whose
/// radii come from the Newton polygon of the coefficient magnitudes. Iterates that form
/// a numerically multiple root (m of them within 100 eps^(1/m) relative) are returned as
/// m copies of their mean.
RootSet roots(const Polynomial& p, const RootFinderConfig& cfg = {});

/// Wraps roots known by construction, filling in scale and residuals.
RootSet root_set_from(const Polynomial& p, std::vector<Complex> known_roots);

struct RealnessVerdict {
  bool is_real_rooted = true;
  double max_imag = 0.0;
  double tol_used = 0.0;
};

/// Real-rooted iff max |Im r| <= tol * max(1, max |r|).
RealnessVerdict classify_real(const RootSet& rs, double tol = kDefaultRealTol);

/// Real parts in ascending order.
std::vector<double> sorted_real_parts(const RootSet& rs);

/// Smallest gap between consecutive sorted real parts. Throws TooFewRoots (< 2 roots) or
/// NotRealRooted (classify_real fails at `tol`).
double mesh(const RootSet& rs, double tol = kDefaultRealTol);

/// Largest and smallest root of a real-rooted set.
struct Extremes {
  double largest = 0.0;
  double smallest = 0.0;
};

Extremes extremes(const RootSet& rs, double tol = kDefaultRealTol);

/// Weak alternation of the sorted roots of P and Q, ties allowed within tol * scale.
/// Degrees must be equal or differ by one.
bool interlace(const Polynomial& p, const Polynomial& q, double tol = kDefaultRealTol,
               const RootFinderConfig& cfg = {});

/// Sorted-list version of interlace. `a` has the same length as `b` or one more.
bool interlace_sorted(std::span<const double> a, std::span<const double> b, double slack);

/// Monte-Carlo check that c P + d Q is real-rooted for `n_samples` random (c, d) on the
/// unit circle. Returns false as soon as a witness pair is found.
bool pencil_hyperbolic_sample(const Polynomial& p, const Polynomial& q, int n_samples,
                              std::uint64_t seed, double tol = kDefaultRealTol,
                              const RootFinderConfig& cfg = {});

/// Greedy nearest-neighbour matching on sorted real parts; returns the largest matched
/// distance, or +inf when the sizes differ.
double matched_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace fdzeros
