#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

namespace confkit {

/// Base class of every exception thrown by confkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where a diagnostic points: a 1-based source line or a state name.
using Location = std::variant<std::monostate, std::size_t, std::string>;

struct Diagnostic {
  enum class Severity { Warning, Error };

  Severity severity = Severity::Warning;
  Location location;
  std::string message;

  /// "line 3: ..." / "state s2: ..." / "...".
  std::string to_string() const;
};

/// A model file could not be turned into a valid transition system.
class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic diagnostic);

  const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

/// A regular expression is malformed or mentions a symbol outside the alphabet.
class RegexError : public Error {
 public:
  RegexError(std::string message, std::size_t position);

  /// 0-based character offset into the expression text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace confkit
