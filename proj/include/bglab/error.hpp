#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bglab {

  enum class ErrorCode {
    index_out_of_range,
    not_associative,
    malformed_input,
    internal_inconsistency,
    not_block_group,
    not_idempotent,
    universe_mismatch,
    not_injective,
    not_closed,
    bijection_failure,
    multiplicativity_failure,
    regular_collision,
    order_too_large,
    unbound_variable,
    too_many_variables,
    parse_error,
    closure_too_large,
    empty_alphabet,
    fiber_not_nilpotent,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every failure raised by the library. `witness()` carries the offending
  // element indices (a triple for associativity, a pair for collisions, ...)
  // so callers and tests can inspect them without parsing the message.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what, std::vector<std::size_t> witness = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code),
          _witness(std::move(witness)) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorCode                _code;
    std::vector<std::size_t> _witness;
  };

  // Raised by the text parsers; line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error(ErrorCode::parse_error,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
                    + what,
                {line, column}),
          _line(line),
          _column(column),
          _message(what) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }
    // The message without the position prefix.
    std::string const& message() const noexcept {
      return _message;
    }

   private:
    std::size_t _line;
    std::size_t _column;
    std::string _message;
  };

}  // namespace bglab
