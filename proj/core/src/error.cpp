#include "agorum/error.hpp"

namespace agorum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax: return "syntax_error";
    case ErrorCode::invalid_agenda: return "invalid_agenda";
    case ErrorCode::invalid_profile: return "invalid_profile";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_in_agenda: return "not_in_agenda";
    case ErrorCode::undefined_distance: return "undefined_distance";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::not_independent: return "not_independent";
    case ErrorCode::property_holds: return "property_holds";
    case ErrorCode::io: return "io_error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string witness)
    : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

namespace {

std::string located(const std::string& message, std::size_t column, std::size_t line) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ", " : std::string{};
  return where + "column " + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t column, std::size_t line)
    : Error(ErrorCode::syntax, located(message, column, line)), column_(column), line_(line) {}

}  // namespace agorum
