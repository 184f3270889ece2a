#include "fdzeros/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace fdzeros {

namespace {

double finite_number(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ParseError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(field, "number is not finite");
  return v;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json complex_list(std::span<const Complex> zs) {
  Json arr = Json::array();
  for (const Complex z : zs) arr.push_back(complex_to_json(z));
  return arr;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw ParseError(field, "expected [re, im]");
  return {finite_number(j[0], field + "[0]"), finite_number(j[1], field + "[1]")};
}

Json to_json(const Polynomial& p) { return Json{{"coeffs", complex_list(p.coeffs())}}; }

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("$", "expected an object with \"coeffs\"");
  if (!j.contains("coeffs")) throw ParseError("coeffs", "missing");
  const Json& arr = j.at("coeffs");
  if (!arr.is_array()) throw ParseError("coeffs", "expected an array");
  std::vector<Complex> c;
  c.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k)
    c.push_back(complex_from_json(arr[k], "coeffs[" + std::to_string(k) + "]"));
  return make_poly(std::move(c));
}

Json to_json(const RootSet& rs) {
  return Json{{"roots", complex_list(rs.roots)}, {"residuals", rs.residuals}};
}

Json to_json(const RealnessVerdict& v) {
  return Json{{"is_real_rooted", v.is_real_rooted}, {"max_imag", v.max_imag}, {"tol_used", v.tol_used}};
}

Json to_json(const FDOperator& op) {
  Json terms = Json::array();
  for (const auto& [j, a] : op.terms()) terms.push_back(Json{{"j", j}, {"a", complex_to_json(a)}});
  return Json{{"lambda", complex_to_json(op.lambda())}, {"terms", terms}};
}

FDOperator operator_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("$", "expected an object with \"lambda\" and \"terms\"");
  if (!j.contains("lambda")) throw ParseError("lambda", "missing");
  const Complex lambda = complex_from_json(j.at("lambda"), "lambda");
  if (lambda == Complex{}) throw ParseError("lambda", "shift must be nonzero");
  if (!j.contains("terms")) throw ParseError("terms", "missing");
  const Json& arr = j.at("terms");
  if (!arr.is_array()) throw ParseError("terms", "expected an array");

  std::map<int, Complex> terms;
  std::map<int, std::size_t> position;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "terms[" + std::to_string(i) + "]";
    const Json& t = arr[i];
    if (!t.is_object()) throw ParseError(field, "expected {\"j\": int, \"a\": [re, im]}");
    if (!t.contains("j")) throw ParseError(field + ".j", "missing");
    if (!t.at("j").is_number_integer()) throw ParseError(field + ".j", "expected an integer");
    const auto jj = t.at("j").get<long long>();
    if (jj < std::numeric_limits<int>::min() / 2 || jj > std::numeric_limits<int>::max() / 2)
      throw ParseError(field + ".j", "index out of range");
    if (!t.contains("a")) throw ParseError(field + ".a", "missing");
    const Complex a = complex_from_json(t.at("a"), field + ".a");
    const int idx = static_cast<int>(jj);
    if (terms.contains(idx)) throw ParseError(field + ".j", "duplicate index " + std::to_string(idx));
    terms[idx] = a;
    position[idx] = i;
  }
  // zero entries strictly inside [l, m] are harmless; at the ends they are rejected
  if (terms.size() < 2) throw ParseError("terms", "need at least two indices l < m");
  if (terms.begin()->second == Complex{})
    throw ParseError("terms[" + std::to_string(position[terms.begin()->first]) + "].a",
                     "coefficient at the lowest index must be nonzero");
  if (terms.rbegin()->second == Complex{})
    throw ParseError("terms[" + std::to_string(position[terms.rbegin()->first]) + "].a",
                     "coefficient at the highest index must be nonzero");
  return FDOperator(lambda, std::move(terms));
}

Json to_json(const OperatorVerdict& v) {
  return Json{
      {"cond1_pure_imag_shift", v.cond1_pure_imag_shift},
      {"re_lambda_abs", v.re_lambda_abs},
      {"cond2_symmetric_support", v.cond2_symmetric_support},
      {"cond3_unimodular_roots", v.cond3_unimodular_roots},
      {"max_modulus_deviation", v.max_modulus_deviation},
      {"cond4_positive_product", v.cond4_positive_product},
      {"extreme_product", complex_to_json(v.extreme_product)},
      {"hyperbolicity_preserver", v.hyperbolicity_preserver},
      {"strip_preserver", v.strip_preserver},
      {"generating_roots", complex_list(v.generating_roots)},
  };
}

Json to_json(const Witness& w) {
  return Json{{"input", to_json(w.input)}, {"image_roots", to_json(w.image_roots)}, {"offense", w.offense}};
}

Json to_json(const CotangentZeros& z) {
  return Json{{"n", z.n},
              {"theta", z.theta},
              {"count", z.count},
              {"zeros", z.zeros},
              {"conditioning_warning", z.conditioning_warning}};
}

Json to_json(const ZeroCheck& c) {
  return Json{{"h", c.h}, {"scaled_zeros", c.scaled_zeros}, {"residuals", c.residuals}};
}

Json to_json(const ApolarityReport& r) {
  return Json{{"apolar", r.apolar}, {"sum", complex_to_json(r.sum)}, {"sum_magnitude", std::abs(r.sum)},
              {"scale", r.scale}};
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(source, std::string("invalid JSON: ") + e.what());
  }
}

void write_csv(std::ostream& out, const AsymptoticReport& rep) {
  out << "h,j,actual,predicted,residual,scaled_residual\n";
  for (const auto& r : rep.records) {
    out << g17(r.h) << ',' << r.j << ',' << g17(r.actual.real()) << ',' << g17(r.predicted.real()) << ','
        << g17(r.residual) << ',' << g17(r.scaled_residual) << '\n';
  }
}

Json summary_json(const AsymptoticReport& rep) {
  return Json{{"order", rep.order},
              {"theta", rep.theta},
              {"h_min", rep.h_grid.empty() ? Json(nullptr) : Json(rep.h_grid.front())},
              {"h_max", rep.h_grid.empty() ? Json(nullptr) : Json(rep.h_grid.back())},
              {"steps", rep.h_grid.size()},
              {"fitted_decay", number_or_null(rep.fitted_decay)},
              {"omega_bound_ok", rep.omega_bound_ok},
              {"conditioning_warning", rep.conditioning_warning}};
}

}  // namespace fdzeros
