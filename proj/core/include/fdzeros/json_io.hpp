#pragma once

/**
 * @file json_io.hpp
 * @brief JSON and CSV forms of the library values.
 *
 *   Polynomial   {"coeffs": [[re, im], ...]}                  ascending powers
 *   RootSet      {"roots": [[re, im], ...], "residuals": [...]}
 *   FDOperator   {"lambda": [re, im], "terms": [{"j": int, "a": [re, im]}, ...]}
 *
 * Parsers throw ParseError naming the offending field; non-finite numbers are rejected.
 */

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "fdzeros/asymptotics.hpp"
#include "fdzeros/debruijn.hpp"
#include "fdzeros/fd_operator.hpp"
#include "fdzeros/polynomial.hpp"
#include "fdzeros/rootfind.hpp"
#include "fdzeros/walsh.hpp"

namespace fdzeros {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& field);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const RootSet& rs);
Json to_json(const RealnessVerdict& v);

Json to_json(const FDOperator& op);
FDOperator operator_from_json(const Json& j);

Json to_json(const OperatorVerdict& v);
Json to_json(const Witness& w);
Json to_json(const CotangentZeros& z);
Json to_json(const ZeroCheck& c);
Json to_json(const ApolarityReport& r);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json_text(const std::string& text, const std::string& source);

/// Header "h,j,actual,predicted,residual,scaled_residual" then one row per (h, j).
/// Numbers use 17 significant digits; complex values are written by real part.
void write_csv(std::ostream& out, const AsymptoticReport& rep);

/// fitted_decay (null when undefined), omega_bound_ok, order, theta, grid bounds.
Json summary_json(const AsymptoticReport& rep);

}  // namespace fdzeros
