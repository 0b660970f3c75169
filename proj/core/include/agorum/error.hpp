#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agorum {

enum class ErrorCode {
  syntax,
  invalid_agenda,
  invalid_profile,
  invalid_argument,
  not_in_agenda,
  undefined_distance,
  budget_exceeded,
  not_independent,
  property_holds,
  io,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `witness` carries a human-readable
// rendering of the offending object (mi-subset, row, profile pair) when one
// exists; it is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

// Parse failure with a 1-based column (and line, when reading files).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column, std::size_t line = 0);

  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

}  // namespace agorum
