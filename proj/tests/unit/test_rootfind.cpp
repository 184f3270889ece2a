#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fdzeros/debruijn.hpp"
#include "fdzeros/errors.hpp"
#include "support.hpp"

using namespace fdzeros;
using namespace fdzeros::test;
using namespace std::complex_literals;

TEST_CASE("roots of small polynomials") {
  CHECK(max_abs_diff(sorted_reals(roots(real_poly({-1, 0, 1}))), {-1.0, 1.0}) < 1e-14);

  const RootSet ri = roots(real_poly({1, 0, 1}));
  REQUIRE(ri.roots.size() == 2);
  const Complex expected[] = {1i, -1i};
  CHECK(matched_distance(ri.roots, expected) < 1e-14);

  const double h = 5.0;
  const RootSet rs = roots(real_poly({2 - 2 * h * h, 0, 2}));
  CHECK(max_abs_diff(sorted_reals(rs), {-std::sqrt(24.0), std::sqrt(24.0)}) < 1e-13);
  for (const double r : rs.residuals) CHECK(r <= 1e-11);
}

TEST_CASE("roots errors and edge cases") {
  CHECK_THROWS_AS(roots(Polynomial{}), Error);
  try {
    roots(real_poly({3}));
    FAIL("expected ConstantPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConstantPolynomial);
  }
  const RootSet z = roots(real_poly({0, 0, 0, 1}));
  CHECK(z.roots.size() == 3);
  for (const Complex r : z.roots) CHECK(std::abs(r) == 0.0);

  RootFinderConfig tight;
  tight.max_iter = 0;
  CHECK_THROWS_AS(roots(real_poly({1, 2, 3, 4, 5}), tight), NonConvergence);
}

TEST_CASE("roots of clustered, high-degree, and wide-scale inputs") {
  std::vector<double> r;
  for (int k = 1; k <= 20; ++k) r.push_back(k);
  const RootSet rs = roots(Polynomial::from_real_roots(r));
  CHECK(rs.roots.size() == 20);
  CHECK(classify_real(rs, 1e-12).is_real_rooted);
  // root condition numbers reach 1e13 here; the exactly rounded coefficients already move roots by 6e-4
  CHECK(max_abs_diff(sorted_reals(rs), r) < 2e-2);

  const RootSet wide = roots(real_poly({1e-8, -(1e4 + 1e-4), 1}));  // roots 1e-12 and ~1e4
  CHECK(wide.roots.size() == 2);
}

TEST_CASE("multiple roots come back as repeated, well-resolved values") {
  for (const int m : {2, 3, 4, 5}) {
    std::vector<double> r(static_cast<std::size_t>(m), 2.5);
    r.push_back(-1.0);
    const RootSet rs = roots(Polynomial::from_real_roots(r));
    INFO("multiplicity " << m);
    CHECK(classify_real(rs, 1e-12).is_real_rooted);
    CHECK(max_abs_diff(sorted_reals(rs), sorted_reals(root_set_from({}, {r.begin(), r.end()}))) < 1e-9);
  }
  // (1 + t^2)^2
  for (const Complex z : roots(real_poly({1, 0, 2, 0, 1})).roots) CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
  // distinct roots 1e-3 apart stay distinct
  const double close[] = {1.0, 1.001};
  CHECK(mesh(roots(Polynomial::from_real_roots(close))) == doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("classify_real") {
  const RootSet a = root_set_from(real_poly({-1, 0, 1}), {1.0, -1.0});
  CHECK(classify_real(a).is_real_rooted);
  const RootSet b = root_set_from(real_poly({1, 0, 1}), {1i, -1i});
  CHECK_FALSE(classify_real(b).is_real_rooted);
  const RootSet c = root_set_from(make_poly({-(1.0 + 1e-12i), 1.0}), {1.0 + 1e-12i});
  const RealnessVerdict v = classify_real(c, 1e-9);
  CHECK(v.is_real_rooted);
  CHECK(v.tol_used == 1e-9);
}

TEST_CASE("mesh") {
  CHECK(mesh(roots(real_poly({-1, 0, 1}))) == doctest::Approx(2.0));
  CHECK(mesh(roots(qn(3, 0.0))) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  const double dbl[] = {1.0, 1.0, 3.0};
  const Polynomial p = Polynomial::from_real_roots(dbl);
  CHECK(mesh(roots(p)) == 0.0);

  CHECK_THROWS_AS(mesh(roots(real_poly({-1, 1}))), Error);
  try {
    mesh(roots(real_poly({1, 0, 1})));
    FAIL("expected NotRealRooted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotRealRooted);
  }
}

TEST_CASE("extremes") {
  const Extremes e = extremes(roots(real_poly({-1, 0, 1})));
  CHECK(e.largest == doctest::Approx(1.0));
  CHECK(e.smallest == doctest::Approx(-1.0));
  const Extremes single = extremes(roots(real_poly({-5, 1})));
  CHECK(single.largest == 5.0);
  CHECK(single.smallest == 5.0);
  const Extremes q4 = extremes(roots(qn(4, 0.0)));
  CHECK(q4.largest == doctest::Approx(1.0));
  CHECK(q4.smallest == doctest::Approx(-1.0));
  CHECK_THROWS_AS(extremes(RootSet{}), Error);
}

TEST_CASE("interlace") {
  const Polynomial p = real_poly({-1, 0, 1});
  CHECK(interlace(p, real_poly({0, -2, 1})));
  CHECK_FALSE(interlace(p, real_poly({12, -7, 1})));
  CHECK(interlace(p, shift_arg(p, -2.0)));  // boundary tie at shift = mesh
  CHECK(interlace(real_poly({0, 1}), p));   // degrees differ by one
  CHECK_FALSE(interlace(real_poly({-0.5, 1}), real_poly({2, -3, 1})));

  try {
    interlace(real_poly({0, 1}), real_poly({0, 0, 0, 1}));
    FAIL("expected DegreeGapTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegreeGapTooLarge);
  }
  try {
    interlace(real_poly({1, 0, 1}), p);
    FAIL("expected NotRealRooted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotRealRooted);
  }
}

TEST_CASE("pencil sample agrees with interlace on the examples") {
  const Polynomial p = real_poly({-1, 0, 1});
  CHECK(pencil_hyperbolic_sample(p, real_poly({0, -2, 1}), 200, 1));
  CHECK_FALSE(pencil_hyperbolic_sample(p, real_poly({12, -7, 1}), 200, 1));
  CHECK(pencil_hyperbolic_sample(p, p, 200, 1));
}

TEST_CASE("matched_distance") {
  const Complex a[] = {1.0, 2.0, 3.0};
  const Complex b[] = {3.0, 1.0, 2.0 + 1e-9};
  CHECK(matched_distance(a, b) == doctest::Approx(1e-9));
  const Complex c[] = {1.0};
  CHECK(matched_distance(a, c) == std::numeric_limits<double>::infinity());
}
