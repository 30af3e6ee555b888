#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tltt/syntax.hpp"

namespace tltt {

enum class Severity : std::uint8_t { Error, Warning };

enum class DiagCode : std::uint8_t {
  UnboundVariable,
  SyntaxError,
  ConversionFailure,
  UniverseError,
  FibrancyViolation,
  NonFibrantMotive,
  NonFibrantEqualityFormation,
  InferenceFailure,
  DuplicateName,
  ExpectedFailureMissing,
};

const char* code_name(DiagCode c);
std::optional<DiagCode> code_from_name(std::string_view name);

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::InferenceFailure;
  SourceSpan span;
  std::string message;
  // Present for ConversionFailure / FibrancyViolation / UniverseError.
  std::optional<std::string> expected;
  std::optional<std::string> actual;
};

/// Thrown by the parser and the typechecker; carries the full diagnostic.
class CheckError : public std::runtime_error {
 public:
  explicit CheckError(Diagnostic d)
      : std::runtime_error(d.message), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diag_; }
  DiagCode code() const { return diag_.code; }

 private:
  Diagnostic diag_;
};

[[noreturn]] void fail(DiagCode code, const SourceSpan& span,
                       std::string message,
                       std::optional<std::string> expected = std::nullopt,
                       std::optional<std::string> actual = std::nullopt);

}  // namespace tltt
