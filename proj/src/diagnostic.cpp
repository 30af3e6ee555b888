#include "tltt/diagnostic.hpp"

#include <array>

namespace tltt {

namespace {
constexpr std::array kCodes = {
    DiagCode::UnboundVariable,   DiagCode::SyntaxError,
    DiagCode::ConversionFailure, DiagCode::UniverseError,
    DiagCode::FibrancyViolation, DiagCode::NonFibrantMotive,
    DiagCode::NonFibrantEqualityFormation,
    DiagCode::InferenceFailure,  DiagCode::DuplicateName,
    DiagCode::ExpectedFailureMissing,
};
}  // namespace

const char* code_name(DiagCode c) {
  switch (c) {
    case DiagCode::UnboundVariable: return "UnboundVariable";
    case DiagCode::SyntaxError: return "SyntaxError";
    case DiagCode::ConversionFailure: return "ConversionFailure";
    case DiagCode::UniverseError: return "UniverseError";
    case DiagCode::FibrancyViolation: return "FibrancyViolation";
    case DiagCode::NonFibrantMotive: return "NonFibrantMotive";
    case DiagCode::NonFibrantEqualityFormation:
      return "NonFibrantEqualityFormation";
    case DiagCode::InferenceFailure: return "InferenceFailure";
    case DiagCode::DuplicateName: return "DuplicateName";
    case DiagCode::ExpectedFailureMissing: return "ExpectedFailureMissing";
  }
  return "?";
}

std::optional<DiagCode> code_from_name(std::string_view name) {
  for (DiagCode c : kCodes)
    if (name == code_name(c)) return c;
  return std::nullopt;
}

void fail(DiagCode code, const SourceSpan& span, std::string message,
          std::optional<std::string> expected,
          std::optional<std::string> actual) {
  Diagnostic d;
  d.code = code;
  d.span = span;
  d.message = std::move(message);
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  throw CheckError(std::move(d));
}

}  // namespace tltt
