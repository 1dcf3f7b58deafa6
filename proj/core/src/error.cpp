#include "confkit/error.hpp"

#include <sstream>

namespace confkit {

std::string Diagnostic::to_string() const {
  std::ostringstream out;
  if (const auto* line = std::get_if<std::size_t>(&location)) {
    out << "line " << *line << ": ";
  } else if (const auto* state = std::get_if<std::string>(&location)) {
    out << "state " << *state << ": ";
  }
  out << message;
  return out.str();
}

ParseError::ParseError(Diagnostic diagnostic)
    : Error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

RegexError::RegexError(std::string message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

}  // namespace confkit
