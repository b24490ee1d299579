#include "quasilab/limits.hpp"

#include <cstdlib>
#include <string>

#include "quasilab/error.hpp"

namespace quasilab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kBadSymbol: return "BadSymbol";
    case ErrorCode::kNotLatin: return "NotLatin";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotPermutation: return "NotPermutation";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kMissingEquals: return "MissingEquals";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kUnknownIdentity: return "UnknownIdentity";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kNoRightUnit: return "NoRightUnit";
    case ErrorCode::kNotAbelianGroup: return "NotAbelianGroup";
    case ErrorCode::kRepresentationMismatch: return "RepresentationMismatch";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kEmptyList: return "EmptyList";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kBadGroupSpec: return "BadGroupSpec";
    case ErrorCode::kFormatError: return "FormatError";
  }
  return "Unknown";
}

NotLatinError::NotLatinError(bool is_row, int row, int col, int symbol)
    : Error(ErrorCode::kNotLatin,
            "symbol " + std::to_string(symbol) + " repeated in " +
                (is_row ? "row " + std::to_string(row)
                        : "column " + std::to_string(col)) +
                " at (" + std::to_string(row) + ", " + std::to_string(col) + ")"),
      is_row_(is_row),
      row_(row),
      col_(col),
      symbol_(symbol) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected,
                         const std::string& message)
    : Error(ErrorCode::kSyntaxError,
            message + " at position " + std::to_string(position) +
                (expected.empty() ? "" : " (expected " + expected + ")")),
      position_(position),
      expected_(std::move(expected)) {}

Limits Limits::FromEnvironment() {
  Limits limits;
  if (const char* env = std::getenv("QUASILAB_MAX_ORDER")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) {
        limits.max_model_order = value;
        limits.max_model_order_4var = value;
      }
    } catch (const std::exception&) {
      // Unparseable values leave the defaults in place.
    }
  }
  return limits;
}

}  // namespace quasilab
