#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hindlab {

/// Failure categories raised by the library. Each maps to one error named in
/// the operation contracts.
enum class Errc {
  invalid_argument,
  disjoint_windows,
  empty_set,
  arity_cap_exceeded,
  length_exceeds_window,
  window_too_small,
  window_too_large,
  precision_loss,
  window_exceeded,
  no_ones,
  not_in_language,
  budget_exceeded,
  solver_cap_exceeded,
  not_a_cover,
  too_small,
  schedule_too_tight,
  overflow,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure that remembers the offending 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hindlab
