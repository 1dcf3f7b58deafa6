#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "confkit/models.hpp"

namespace confkit {

/// Where an automaton state came from.  Product states concatenate their
/// operands' tags ("s0" x "d0" -> "s0d0"); subset states list their members.
struct StateTag {
  std::vector<std::string> provenance;
  std::string display;

  static StateTag named(std::string name);
  static StateTag product(const StateTag& left, const StateTag& right);
  /// A singleton subset keeps its member's tag; larger subsets render as
  /// "{a,b}".
  static StateTag subset(std::span<const StateTag> members);

  friend bool operator==(const StateTag&, const StateTag&) = default;
};

/// Finite state automaton with epsilon moves.  Symbols index into alphabet(),
/// whose order is the canonical order used for enumeration.
class Fsa {
 public:
  using State = std::uint32_t;
  using Symbol = std::uint32_t;
  static constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

  struct Edge {
    Symbol symbol;
    State target;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  explicit Fsa(std::vector<std::string> alphabet);

  State add_state(StateTag tag, bool final = false);
  /// Duplicate edges are ignored.
  void add_transition(State from, Symbol symbol, State to);
  void add_transition(State from, std::string_view label, State to);
  void set_initial(State s);
  void set_final(State s, bool final);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::optional<Symbol> symbol_of(std::string_view label) const;
  /// "ε" for kEpsilon.
  std::string_view symbol_name(Symbol s) const;

  std::size_t num_states() const noexcept { return tags_.size(); }
  std::size_t num_transitions() const;
  State initial() const noexcept { return initial_; }
  bool is_final(State s) const { return finals_.at(s); }
  const StateTag& tag(State s) const { return tags_.at(s); }
  std::span<const Edge> edges(State s) const { return edges_.at(s); }

  /// First target on `symbol`, for deterministic automata.
  std::optional<State> successor(State s, Symbol symbol) const;

  bool has_epsilon() const;
  bool is_deterministic() const;
  bool is_complete() const;

 private:
  void check_state(State s) const;

  std::vector<std::string> alphabet_;
  std::vector<StateTag> tags_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> finals_;
  State initial_ = 0;
};

/// Same states, internal moves become epsilon, every state final.  The
/// alphabet is ts.alphabet().
Fsa induced_fsa(const TransitionSystem& ts);

/// Epsilon closure of a set of states, returned sorted.
std::vector<Fsa::State> epsilon_closure(const Fsa& a, std::vector<Fsa::State> states);

/// Subset construction over epsilon closures.  Only reachable subsets are
/// built, and two closures that share their symbol-moving and final members
/// are the same subset.
Fsa determinize(const Fsa& a);

/// Adds at most one non-final dead state "c" absorbing every missing move.
/// Throws Error if `a` is not deterministic.
Fsa complete(const Fsa& a);

/// Same automaton over a larger alphabet: `alphabet` must list every symbol
/// of `a`; new symbols are appended without transitions.
Fsa extend_alphabet(const Fsa& a, const std::vector<std::string>& alphabet);

/// Determinizes and completes as needed, then swaps final and non-final.
Fsa complement(const Fsa& a);

/// Reachable product over the union alphabet; (p, q) is final iff both are.
Fsa intersection(const Fsa& a, const Fsa& b);

/// Reachable product of both operands, each completed over the union
/// alphabet; (p, q) is final iff either is.
Fsa union_of(const Fsa& a, const Fsa& b);

/// True iff no final state is reachable from the initial state.
bool is_empty_language(const Fsa& a);

/// Membership by epsilon-closure simulation.  Throws Error on a symbol
/// outside the alphabet.
bool accepts(const Fsa& a, const Word& word);

/// Accepted words of length <= max_len, shortest first, then lexicographic in
/// alphabet order.
std::vector<Word> enumerate_accepted(const Fsa& a, std::size_t max_len);

/// Renames states "<prefix>0", "<prefix>1", ... in breadth-first order from
/// the initial state (edges visited in alphabet order).  Unreachable states
/// keep their relative order after the reachable ones.
Fsa rename_states(const Fsa& a, std::string_view prefix);

/// Merged alphabet: a's symbols in order, then b's symbols not in a.
std::vector<std::string> merge_alphabets(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Graphviz rendering; final states are double circles.
std::string to_dot(const Fsa& a, std::string_view graph_name = "automaton");

}  // namespace confkit
