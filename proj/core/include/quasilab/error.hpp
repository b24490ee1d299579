#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasilab {

enum class ErrorCode {
  kNotSquare,
  kBadSymbol,
  kNotLatin,
  kOutOfRange,
  kDegreeMismatch,
  kNotPermutation,
  kSyntaxError,
  kMissingEquals,
  kEmptySide,
  kUnboundVariable,
  kUnknownIdentity,
  kOrderTooLarge,
  kTooManyVariables,
  kNoRightUnit,
  kNotAbelianGroup,
  kRepresentationMismatch,
  kNotDecomposable,
  kEmptyList,
  kOrderMismatch,
  kBadGroupSpec,
  kFormatError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class NotLatinError : public Error {
 public:
  // `is_row` tells whether the repeat was found scanning a row or a column;
  // `row`/`col` locate the second occurrence of `symbol`.
  NotLatinError(bool is_row, int row, int col, int symbol);

  bool is_row() const noexcept { return is_row_; }
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }
  int symbol() const noexcept { return symbol_; }

 private:
  bool is_row_;
  int row_;
  int col_;
  int symbol_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected,
              const std::string& message);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace quasilab
