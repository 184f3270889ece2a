#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "fdzeros/asymptotics.hpp"
#include "fdzeros/errors.hpp"
#include "fdzeros/json_io.hpp"
#include "support.hpp"

using namespace fdzeros;
using namespace fdzeros::test;

constexpr double kHalfPi = std::numbers::pi / 2;

TEST_CASE("monic head") {
  const MonicHead h = monic_head(real_poly({10, -2, 4, 2}));
  CHECK(h.n == 3);
  CHECK(h.a == Complex{2.0});
  CHECK(h.b == Complex{-1.0});
  CHECK(h.c == Complex{5.0});
  CHECK(monic_head(real_poly({1, 0, 1})).c == Complex{});
  try {
    monic_head(real_poly({1, 1}));
    FAIL("expected DegreeTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegreeTooSmall);
  }
}

TEST_CASE("predictions for x^2 are exact at every order") {
  const MonicHead head = monic_head(real_poly({0, 0, 1}));
  for (int order = 0; order <= 2; ++order) {
    const auto p = predict_roots(head, kHalfPi, 7.0, order);
    REQUIRE(p.size() == 2);
    CHECK(std::abs(p[0] + 7.0) < 1e-14);
    CHECK(std::abs(p[1] - 7.0) < 1e-14);
  }
}

TEST_CASE("order-one prediction for x^2 + 1") {
  const double h = 10.0;
  const auto p = predict_roots(monic_head(real_poly({1, 0, 1})), kHalfPi, h, 1);
  CHECK(p[0].real() == doctest::Approx(-h + 1 / (2 * h)));
  CHECK(p[1].real() == doctest::Approx(h - 1 / (2 * h)));
}

TEST_CASE("order-zero prediction for x^3 + x^2 at theta 0") {
  const double h = 4.0;
  const auto p = predict_roots(monic_head(real_poly({0, 0, 1, 1})), 0.0, h, 0);
  REQUIRE(p.size() == 2);
  CHECK(p[0].real() == doctest::Approx(-h / std::sqrt(3.0) - 1.0 / 3));
  CHECK(p[1].real() == doctest::Approx(h / std::sqrt(3.0) - 1.0 / 3));
}

TEST_CASE("prediction argument checks") {
  const MonicHead head = monic_head(real_poly({1, 0, 1}));
  CHECK_THROWS_AS(predict_roots(head, 0.3, 1.0, 3), Error);
  CHECK_THROWS_AS(predict_roots(head, 0.3, 0.0, 1), Error);
}

TEST_CASE("actual roots") {
  const auto a = actual_roots(real_poly({0, 0, 1}), kHalfPi, 2.0);
  CHECK(a[0].real() == doctest::Approx(-2.0));
  CHECK(a[1].real() == doctest::Approx(2.0));
  const auto b = actual_roots(real_poly({1, 0, 1}), kHalfPi, 5.0);
  CHECK(b[1].real() == doctest::Approx(std::sqrt(24.0)));
  const auto c = actual_roots(real_poly({0, 0, 0, 1}), 0.0, 1.0);
  REQUIRE(c.size() == 2);
  CHECK(c[1].real() == doctest::Approx(1 / std::sqrt(3.0)));
  CHECK(actual_roots(real_poly({0, 1}), 0.0, 1.0).empty());
}

TEST_CASE("residual sweep of x^2 + 1 decays like 1/(8h^3)") {
  SweepConfig s;
  s.h_min = 10;
  s.h_max = 1000;
  s.steps = 9;
  s.order = 1;
  const AsymptoticReport rep = residual_sweep(real_poly({1, 0, 1}), kHalfPi, s);
  CHECK(rep.h_grid.size() == 9);
  CHECK(rep.records.size() == 18);
  CHECK(rep.fitted_decay == doctest::Approx(-3.0).epsilon(0.02));
  CHECK(rep.omega_bound_ok);
  for (const auto& r : rep.records) {
    const double exact = std::abs(std::sqrt(r.h * r.h - 1) - (r.h - 1 / (2 * r.h)));
    CHECK(r.residual == doctest::Approx(exact).epsilon(0.05));
  }
}

TEST_CASE("residual sweep of x^2 is at roundoff") {
  SweepConfig s;
  s.steps = 5;
  const AsymptoticReport rep = residual_sweep(real_poly({0, 0, 1}), kHalfPi, s);
  for (const auto& r : rep.records) CHECK(r.residual <= 1e-12 * r.h);
  CHECK(rep.omega_bound_ok);
}

TEST_CASE("generic cubic decay rates") {
  const Polynomial p = real_poly({5, -1, 2, 1});
  SweepConfig s;
  s.h_min = std::max(10.0, matching_floor(p));
  s.h_max = 1000;
  s.steps = 15;
  s.order = 1;
  const AsymptoticReport one = residual_sweep(p, 0.7, s);
  CHECK(one.fitted_decay >= -2.2);
  CHECK(one.fitted_decay <= -1.8);
  s.order = 2;
  const AsymptoticReport two = residual_sweep(p, 0.7, s);
  CHECK(two.fitted_decay >= -3.3);
  CHECK(two.fitted_decay <= -2.7);
}

TEST_CASE("sweep enforces the matching floor") {
  SweepConfig s;
  s.h_min = 1.0;
  CHECK_THROWS_AS(residual_sweep(real_poly({-100, 0, 1}), 0.4, s), Error);
  s.enforce_floor = false;
  s.h_max = 2.0;
  s.steps = 2;
  CHECK_NOTHROW(residual_sweep(real_poly({-100, 0, 1}), 0.4, s));
}

TEST_CASE("csv and summary") {
  SweepConfig s;
  s.steps = 2;
  const AsymptoticReport rep = residual_sweep(real_poly({1, 0, 1}), kHalfPi, s);
  std::ostringstream out;
  write_csv(out, rep);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "h,j,actual,predicted,residual,scaled_residual");
  std::getline(lines, row);
  CHECK(row.rfind("10,1,-9.94987437106620", 0) == 0);
  const Json sum = summary_json(rep);
  CHECK(sum.at("order") == 1);
  CHECK(sum.at("omega_bound_ok").get<bool>());
}
