#include <algorithm>
#include <cctype>

#include "confkit/regex.hpp"

namespace confkit {

namespace {

bool is_operator(char c) { return c == '|' || c == '*' || c == '(' || c == ')'; }

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// alt    := concat ('|' concat)*
// concat := postfix+
// postfix:= atom '*'*
// atom   := '(' alt ')' | quoted | symbol
class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& alphabet)
      : text_(text), alphabet_(alphabet) {
    // Longest match first.
    std::sort(alphabet_.begin(), alphabet_.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
  }

  Regex parse() {
    skip_space();
    if (at_end()) throw RegexError("empty expression", 0);
    auto result = parse_alt();
    skip_space();
    if (!at_end()) {
      // Only a stray ')' can stop the top-level alternation early.
      throw RegexError("unbalanced ')'", pos_);
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  Regex parse_alt() {
    std::vector<Regex> options;
    options.push_back(parse_concat());
    skip_space();
    while (!at_end() && peek() == '|') {
      ++pos_;
      options.push_back(parse_concat());
      skip_space();
    }
    return Regex::alt(std::move(options));
  }

  Regex parse_concat() {
    std::vector<Regex> parts;
    for (;;) {
      skip_space();
      if (at_end() || peek() == '|' || peek() == ')') break;
      parts.push_back(parse_postfix());
    }
    if (parts.empty()) {
      if (at_end()) {
        throw RegexError("dangling operator '|'", pos_ == 0 ? 0 : pos_ - 1);
      }
      if (peek() == '|') throw RegexError("dangling operator '|'", pos_);
      throw RegexError("empty group", pos_);
    }
    return Regex::concat(std::move(parts));
  }

  Regex parse_postfix() {
    auto atom = parse_atom();
    skip_space();
    while (!at_end() && peek() == '*') {
      ++pos_;
      atom = Regex::star(std::move(atom));
      skip_space();
    }
    return atom;
  }

  Regex parse_atom() {
    const char c = peek();
    if (c == '*') throw RegexError("dangling operator '*'", pos_);
    if (c == '(') {
      const auto open = pos_++;
      skip_space();
      if (!at_end() && peek() == ')') throw RegexError("empty group", open);
      auto inner = parse_alt();
      skip_space();
      if (at_end()) throw RegexError("unbalanced '('", open);
      ++pos_;  // ')'
      return inner;
    }
    if (c == '\'') return parse_quoted();
    return parse_symbol();
  }

  Regex parse_quoted() {
    const auto open = pos_++;
    const auto close = text_.find('\'', pos_);
    if (close == std::string_view::npos) throw RegexError("unterminated quote", open);
    const std::string name(text_.substr(pos_, close - pos_));
    if (name.empty()) throw RegexError("empty quoted symbol", open);
    if (std::find(alphabet_.begin(), alphabet_.end(), name) == alphabet_.end()) {
      throw RegexError("unknown symbol " + name, open);
    }
    pos_ = close + 1;
    return Regex::symbol(name);
  }

  Regex parse_symbol() {
    const auto rest = text_.substr(pos_);
    for (const auto& s : alphabet_) {
      if (rest.substr(0, s.size()) == s) {
        pos_ += s.size();
        return Regex::symbol(s);
      }
    }
    auto end = pos_;
    while (end < text_.size() && !is_operator(text_[end]) && !is_space(text_[end]) &&
           text_[end] != '\'') {
      ++end;
    }
    throw RegexError("unknown symbol " + std::string(text_.substr(pos_, end - pos_)), pos_);
  }

  std::string_view text_;
  std::vector<std::string> alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text, const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) throw RegexError("empty alphabet", 0);
  return Parser(text, alphabet).parse();
}

}  // namespace confkit
