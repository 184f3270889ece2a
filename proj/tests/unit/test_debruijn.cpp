#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fdzeros/debruijn.hpp"
#include "fdzeros/errors.hpp"
#include "support.hpp"

using namespace fdzeros;
using namespace fdzeros::test;
using namespace std::complex_literals;

constexpr double kPi = std::numbers::pi;

TEST_CASE("apply_tb examples") {
  const Polynomial x2 = real_poly({0, 0, 1});
  CHECK(close_poly(apply_tb(DeBruijnOp(kPi / 2, 1.0), x2), real_poly({-2, 0, 2})));
  const Polynomial drop = apply_tb(DeBruijnOp(0.0, 1.0), x2);
  CHECK(drop == real_poly({0, 4}));
  CHECK(apply_tb(DeBruijnOp(0.0, 1.0), real_poly({1})).is_zero());
  CHECK(apply_tb(DeBruijnOp(kPi, 1.0), x2) == real_poly({0, -4}));
}

TEST_CASE("apply_tb output of real input is exactly real") {
  const Polynomial p = real_poly({0.3, -1.7, 2.2, 0.9, -0.4});
  const Polynomial real_image = apply_tb(DeBruijnOp(0.37, 1.3), p);
  for (const Complex c : real_image.coeffs()) CHECK(c.imag() == 0.0);
  const Polynomial cp = make_poly({1.0, 1i});
  const Polynomial img = apply_tb(DeBruijnOp(0.5, 1.0), cp);
  CHECK(std::abs(img.coeff(0).imag()) > 0.0);
}

TEST_CASE("DeBruijnOp rejects bad parameters") {
  CHECK_THROWS_AS(DeBruijnOp(0.1, 0.0), Error);
  CHECK_THROWS_AS(DeBruijnOp(0.1, -1.0), Error);
  CHECK_THROWS_AS(DeBruijnOp(std::nan(""), 1.0), Error);
}

TEST_CASE("sin theta = 0 decision") {
  CHECK(sin_is_zero(0.0));
  CHECK(sin_is_zero(kPi));
  CHECK(sin_is_zero(2 * kPi));
  CHECK_FALSE(sin_is_zero(1e-9));
  CHECK(near_degenerate(1e-9));
  CHECK_FALSE(near_degenerate(1e-3));
  CHECK(unit_phase(kPi) == Complex{-1.0});
}

TEST_CASE("qn examples") {
  CHECK(close_poly(qn(2, kPi / 2), real_poly({-2, 0, 2})));
  CHECK(qn(2, 0.0) == real_poly({0, 4}));
  CHECK(qn(1, 0.0) == real_poly({2}));
  CHECK(qn(0, 0.0).is_zero());
  CHECK(close_poly(qn(0, kPi / 2), real_poly({2})));
  CHECK_THROWS_AS(qn(-1, 0.3), Error);
}

TEST_CASE("qn_zeros examples") {
  const CotangentZeros a = qn_zeros(2, kPi / 2);
  CHECK(a.count == 2);
  CHECK(max_abs_diff(a.zeros, {1.0, -1.0}) < 1e-15);

  const CotangentZeros b = qn_zeros(4, 0.0);
  CHECK(b.count == 3);
  CHECK(max_abs_diff(b.zeros, {1.0, 0.0, -1.0}) < 1e-15);

  const CotangentZeros c = qn_zeros(3, 0.0);
  CHECK(max_abs_diff(c.zeros, {1 / std::sqrt(3.0), -1 / std::sqrt(3.0)}) < 1e-15);

  CHECK(qn_zeros(1, 0.0).count == 0);
  CHECK(qn_zeros(1, 0.4).count == 1);
  CHECK(qn_zeros(5, 1e-9).conditioning_warning);
}

TEST_CASE("qn_zeros strictly decreasing and matches root finding") {
  for (const double theta : {0.0, 0.3, kPi / 2, 2.5, kPi, 4.0, -0.7}) {
    for (int n = 1; n <= 12; ++n) {
      const CotangentZeros z = qn_zeros(n, theta);
      for (std::size_t k = 1; k < z.zeros.size(); ++k) CHECK(z.zeros[k] < z.zeros[k - 1]);
      if (z.count == 0) continue;
      std::vector<double> expect(z.zeros.rbegin(), z.zeros.rend());
      CHECK(max_abs_diff(sorted_reals(roots(qn(n, theta))), expect) < 1e-9);
    }
  }
}

TEST_CASE("gn examples and scaling") {
  CHECK(close_poly(gn(2, kPi / 2, 3.0), real_poly({-18, 0, 2})));
  CHECK(close_poly(gn(7, 0.9, 1.0), qn(7, 0.9), 0.0));
  CHECK(close_poly(gn(0, kPi / 2, 17.0), real_poly({2})));
  for (int n = 0; n <= 20; ++n) {
    const Polynomial scaled = std::pow(2.5, n) * scale_arg(qn(n, 1.1), 1.0 / 2.5);
    CHECK(relative_coeff_distance(gn(n, 1.1, 2.5), scaled) <= 1e-10);
  }
}

TEST_CASE("check_zeros gives tiny residuals") {
  const ZeroCheck c = check_zeros(qn_zeros(6, 0.8), 2.0);
  CHECK(c.scaled_zeros.size() == 6);
  for (const double r : c.residuals) CHECK(r < 1e-13);
}

TEST_CASE("extremal bounds") {
  const ExtremalBounds a = extremal_bounds(real_poly({0, 0, 1}), kPi / 2, 1.0);
  CHECK(a.lambda_bound == doctest::Approx(1.0));
  CHECK(a.mu_bound == doctest::Approx(-1.0));
  const ExtremalBounds dbl = extremal_bounds(real_poly({25, -10, 1}), kPi / 2, 1.0);
  CHECK(dbl.lambda_bound == doctest::Approx(6.0));
  CHECK(dbl.mu_bound == doctest::Approx(4.0));
  CHECK(max_abs_diff(sorted_reals(roots(apply_tb(DeBruijnOp(kPi / 2, 1.0), real_poly({25, -10, 1})))), {4.0, 6.0}) <
        1e-12);
  // (x - 4)(x - 6) maps to a multiple of (x - 5)^2 - 2
  const ExtremalBounds b = extremal_bounds(real_poly({24, -10, 1}), kPi / 2, 1.0);
  CHECK(b.lambda_bound == doctest::Approx(7.0));
  CHECK(b.mu_bound == doctest::Approx(3.0));
  const auto img = sorted_reals(roots(apply_tb(DeBruijnOp(kPi / 2, 1.0), real_poly({24, -10, 1}))));
  CHECK(max_abs_diff(img, {5.0 - std::sqrt(2.0), 5.0 + std::sqrt(2.0)}) < 1e-12);
  try {
    extremal_bounds(real_poly({0, 1}), 0.0, 1.0);
    FAIL("expected TooFewRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooFewRoots);
  }
  CHECK_THROWS_AS(extremal_bounds(real_poly({1, 0, 1}), 0.5, 1.0), Error);
}

TEST_CASE("mesh floor") {
  CHECK(mesh_floor(2, kPi / 2, 1.0) == doctest::Approx(2.0));
  CHECK(mesh_floor(3, 0.0, 2.0) == doctest::Approx(4.0 / std::sqrt(3.0)));
  try {
    mesh_floor(2, 0.0, 1.0);
    FAIL("expected TooFewRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooFewRoots);
  }
}

TEST_CASE("simplicity margin") {
  const double dbl[] = {1.0, 1.0, -1.0, -1.0};
  CHECK(simplicity_margin(Polynomial::from_real_roots(dbl), kPi / 2, 1.0) > 0.0);
  CHECK(simplicity_margin(real_poly({0, 0, 1}), kPi / 2, 1.0) == doctest::Approx(2.0));
  CHECK(std::isinf(simplicity_margin(real_poly({0, 1}), 0.7, 1.0)));
}

TEST_CASE("line image") {
  const Polynomial x = real_poly({0, 1});
  const Polynomial a = line_image(x, 2.0, kPi);
  CHECK(close_poly(a, make_poly({-2i, 2.0})));
  const RootSet ra = roots(a);
  CHECK(std::abs(ra.roots[0] - 1i) < 1e-15);

  for (const double beta : {-3.0, 0.5, 2.0}) {
    const RootSet rb = roots(line_image(x, beta, kPi / 2));
    CHECK(rb.roots[0].imag() == doctest::Approx(beta / 2));
  }
  CHECK(line_image(real_poly({4}), 1.3, 0.0).is_zero());
}
