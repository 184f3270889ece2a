#pragma once

#include <algorithm>
#include <vector>

#include "fdzeros/polynomial.hpp"
#include "fdzeros/rootfind.hpp"

namespace fdzeros::test {

inline Polynomial real_poly(std::initializer_list<double> c) {
  std::vector<Complex> v(c.begin(), c.end());
  return make_poly(std::move(v));
}

inline bool close_poly(const Polynomial& a, const Polynomial& b, double tol = 1e-12) {
  return relative_coeff_distance(a, b) <= tol;
}

inline std::vector<double> sorted_reals(const RootSet& rs) { return sorted_real_parts(rs); }

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return 1e300;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace fdzeros::test
