#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdzeros {

/// Failure categories raised by the library. The CLI maps them onto exit codes.
enum class ErrorCode {
  kZeroPolynomial,
  kConstantPolynomial,
  kNonConvergence,
  kTooFewRoots,
  kNotRealRooted,
  kDegreeGapTooLarge,
  kImaginaryResidue,
  kDegreeExceedsFrame,
  kDegreeTooSmall,
  kDegenerateQ,
  kMatchAmbiguity,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input document failed schema validation. `field` names the offending JSON path.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(ErrorCode::kParse, field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace fdzeros
