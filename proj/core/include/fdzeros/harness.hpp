#pragma once

/**
 * @file harness.hpp
 * @brief Seeded random-instance generators and the property-suite runner.
 *
 * Every property owns a fixed stream id; its trial seeds are derived from the master seed
 * and that id, so adding or reordering properties never changes another property's
 * instances. A failure record carries the trial seed and replays standalone.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdzeros/fd_operator.hpp"
#include "fdzeros/json_io.hpp"
#include "fdzeros/polynomial.hpp"
#include "fdzeros/random.hpp"

namespace fdzeros {

/// Deliberate defects for exercising the failure path.
enum class Fault {
  kNone,
  /// The verdict-soundness property runs P(x + i) + 4 P(x - i), whose image of a real
  /// polynomial has no real zeros, as if it were a preserver.
  kBrokenOperator,
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  int degree_max = 8;
  double root_lo = -5.0;
  double root_hi = 5.0;
  double tol_real = 1e-7;
  double tol_identity = 1e-9;
  Fault fault = Fault::kNone;
};

/// Throws InvalidArgument unless trials >= 1, degree_max >= 2 and root_lo <= root_hi.
void validate(const SuiteConfig& cfg);

struct PropertyRecord {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// Failures allowed before the property counts as failed (statistical oracles only).
  int tolerated = 0;
  /// Largest (measured - allowed) over all trials; negative values are headroom.
  double worst_violation = 0.0;
  std::optional<Json> example_failure;

  bool passed() const noexcept { return failures <= tolerated; }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<PropertyRecord> properties;

  bool passed() const noexcept;
};

struct HyperbolicSample {
  Polynomial poly;
  std::vector<double> roots;  ///< ascending
};

/// Monic polynomial with n roots drawn uniformly in [lo, hi].
HyperbolicSample random_hyperbolic_sample(int n, double lo, double hi, Rng& rng);
Polynomial random_hyperbolic(int n, double lo, double hi, Rng& rng);

/// Monic polynomial with zeros d_k + c i, d_k uniform in [lo, hi].
Polynomial random_line_poly(int n, double c, double lo, double hi, Rng& rng);

/// lambda = i beta and generating function C prod_k (e^{-i phi_k/2} t + e^{i phi_k/2}) t^{-m}
/// with real C: satisfies all four preserver conditions by construction.
FDOperator random_preserver(Rng& rng, int max_half_order = 2);

/// lambda = i beta and t^{-m} C prod_k (t - e^{i phi_k}) with complex C: conditions 1-3.
FDOperator random_strip_preserver(Rng& rng, int max_half_order = 2);

/// Property names in report order.
std::vector<std::string> property_names();

SuiteReport run_suite(const SuiteConfig& cfg);

struct TrialOutcome {
  bool failed = false;
  double violation = 0.0;
  Json instance;
};

/// Re-executes one trial from a failure record's instance under the same configuration.
TrialOutcome replay(const Json& instance, const SuiteConfig& cfg);

Json to_json(const SuiteReport& report);

}  // namespace fdzeros
