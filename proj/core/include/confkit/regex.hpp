#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "confkit/automata.hpp"
#include "confkit/models.hpp"

namespace confkit {

/// Regular expression over label names.
///
/// The factories normalize: nested concatenations and alternations are
/// flattened, neutral elements dropped and one-child lists collapsed, so a
/// Concat or Alt node always has at least two children.
class Regex {
 public:
  enum class Kind { Empty, Epsilon, Symbol, Concat, Alt, Star };

  static Regex empty();
  static Regex epsilon();
  static Regex symbol(std::string name);
  static Regex concat(std::vector<Regex> parts);
  static Regex alt(std::vector<Regex> options);
  static Regex star(Regex inner);

  Kind kind() const noexcept { return kind_; }
  /// Label name of a Symbol node.
  const std::string& name() const noexcept { return name_; }
  const std::vector<Regex>& children() const noexcept { return children_; }

  /// Concrete syntax; multi-character labels are single-quoted.  Empty prints
  /// as "∅" and Epsilon as "ε", neither of which the parser accepts.
  std::string to_string() const;

  friend bool operator==(const Regex&, const Regex&) = default;

 private:
  Regex(Kind kind, std::string name, std::vector<Regex> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_;
  std::string name_;
  std::vector<Regex> children_;
};

/// Grammar: alternation '|' binds loosest, juxtaposition concatenates,
/// postfix '*', grouping '( )'.  Symbols are matched longest-first against
/// the alphabet; 'quoted' names are taken literally.  Whitespace separates
/// tokens and is otherwise ignored.  Throws RegexError.
Regex parse_regex(std::string_view text, const std::vector<std::string>& alphabet);

/// (l1 | l2 | ... )* over the alphabet.
Regex kleene_closure(const std::vector<std::string>& alphabet);

/// Thompson-style compilation with epsilon moves: one initial and one final
/// state.  The result's alphabet is `alphabet`; throws RegexError if the
/// expression mentions any other symbol.
Fsa regex_to_fsa(const Regex& regex, const std::vector<std::string>& alphabet);

bool nullable(const Regex& regex);

/// Brzozowski derivative, in a canonical form (alternatives sorted and
/// deduplicated) so that iterated derivatives stay finite.
Regex derivative(const Regex& regex, std::string_view symbol);

/// Membership by repeated derivatives; independent of regex_to_fsa.
bool regex_matches(const Regex& regex, const Word& word);

}  // namespace confkit
