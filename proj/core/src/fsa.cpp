#include <algorithm>
#include <deque>
#include <sstream>

#include "confkit/automata.hpp"
#include "confkit/dot.hpp"

namespace confkit {

StateTag StateTag::named(std::string name) {
  StateTag tag;
  tag.provenance.push_back(name);
  tag.display = std::move(name);
  return tag;
}

StateTag StateTag::product(const StateTag& left, const StateTag& right) {
  StateTag tag;
  tag.provenance = left.provenance;
  tag.provenance.insert(tag.provenance.end(), right.provenance.begin(), right.provenance.end());
  tag.display = left.display + right.display;
  return tag;
}

StateTag StateTag::subset(std::span<const StateTag> members) {
  if (members.size() == 1) return members.front();
  StateTag tag;
  tag.display = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != 0) tag.display += ',';
    tag.display += members[i].display;
    tag.provenance.insert(tag.provenance.end(), members[i].provenance.begin(),
                          members[i].provenance.end());
  }
  tag.display += '}';
  if (tag.provenance.empty()) tag.provenance.push_back(tag.display);
  return tag;
}

Fsa::Fsa(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) throw Error("empty symbol in alphabet");
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[i] == alphabet_[j]) throw Error("duplicate symbol '" + alphabet_[i] + "'");
    }
  }
}

Fsa::State Fsa::add_state(StateTag tag, bool final) {
  tags_.push_back(std::move(tag));
  edges_.emplace_back();
  finals_.push_back(final);
  return static_cast<State>(tags_.size() - 1);
}

void Fsa::check_state(State s) const {
  if (s >= tags_.size()) throw Error("state " + std::to_string(s) + " out of range");
}

void Fsa::add_transition(State from, Symbol symbol, State to) {
  check_state(from);
  check_state(to);
  if (symbol != kEpsilon && symbol >= alphabet_.size()) {
    throw Error("symbol " + std::to_string(symbol) + " out of range");
  }
  auto& out = edges_[from];
  const Edge edge{symbol, to};
  auto it = std::lower_bound(out.begin(), out.end(), edge);
  if (it == out.end() || *it != edge) out.insert(it, edge);
}

void Fsa::add_transition(State from, std::string_view label, State to) {
  auto symbol = symbol_of(label);
  if (!symbol) throw Error("symbol '" + std::string(label) + "' is not in the alphabet");
  add_transition(from, *symbol, to);
}

void Fsa::set_initial(State s) {
  check_state(s);
  initial_ = s;
}

void Fsa::set_final(State s, bool final) {
  check_state(s);
  finals_[s] = final;
}

std::optional<Fsa::Symbol> Fsa::symbol_of(std::string_view label) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), label);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<Symbol>(it - alphabet_.begin());
}

std::string_view Fsa::symbol_name(Symbol s) const {
  if (s == kEpsilon) return "ε";
  return alphabet_.at(s);
}

std::size_t Fsa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& out : edges_) n += out.size();
  return n;
}

std::optional<Fsa::State> Fsa::successor(State s, Symbol symbol) const {
  for (const auto& e : edges_.at(s)) {
    if (e.symbol == symbol) return e.target;
  }
  return std::nullopt;
}

bool Fsa::has_epsilon() const {
  for (const auto& out : edges_) {
    // Edges are sorted and kEpsilon is the largest symbol.
    if (!out.empty() && out.back().symbol == kEpsilon) return true;
  }
  return false;
}

bool Fsa::is_deterministic() const {
  for (const auto& out : edges_) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].symbol == kEpsilon) return false;
      if (i > 0 && out[i - 1].symbol == out[i].symbol) return false;
    }
  }
  return true;
}

bool Fsa::is_complete() const {
  if (!is_deterministic()) return false;
  for (const auto& out : edges_) {
    if (out.size() != alphabet_.size()) return false;
  }
  return true;
}

Fsa induced_fsa(const TransitionSystem& ts) {
  Fsa fsa(ts.alphabet());
  for (const auto& s : ts.states()) fsa.add_state(StateTag::named(s), true);
  fsa.set_initial(0);
  for (const auto& t : ts.transitions()) {
    const auto from = static_cast<Fsa::State>(*ts.state_index(t.source));
    const auto to = static_cast<Fsa::State>(*ts.state_index(t.target));
    if (t.label.visible()) {
      fsa.add_transition(from, t.label.name, to);
    } else {
      fsa.add_transition(from, Fsa::kEpsilon, to);
    }
  }
  return fsa;
}

std::vector<Fsa::State> epsilon_closure(const Fsa& a, std::vector<Fsa::State> states) {
  std::vector<bool> in(a.num_states(), false);
  std::vector<Fsa::State> stack;
  for (auto s : states) {
    if (!in[s]) {
      in[s] = true;
      stack.push_back(s);
    }
  }
  std::vector<Fsa::State> closure;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    closure.push_back(s);
    for (const auto& e : a.edges(s)) {
      if (e.symbol == Fsa::kEpsilon && !in[e.target]) {
        in[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

bool is_empty_language(const Fsa& a) {
  if (a.num_states() == 0) return true;
  std::vector<bool> seen(a.num_states(), false);
  std::vector<Fsa::State> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    if (a.is_final(s)) return false;
    for (const auto& e : a.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  return true;
}

bool accepts(const Fsa& a, const Word& word) {
  if (a.num_states() == 0) return false;
  auto current = epsilon_closure(a, {a.initial()});
  for (const auto& label : word) {
    const auto symbol = a.symbol_of(label);
    if (!symbol) throw Error("unknown symbol '" + label + "'");
    std::vector<Fsa::State> next;
    for (auto s : current) {
      for (const auto& e : a.edges(s)) {
        if (e.symbol == *symbol) next.push_back(e.target);
      }
    }
    if (next.empty()) return false;
    current = epsilon_closure(a, std::move(next));
  }
  return std::any_of(current.begin(), current.end(), [&](auto s) { return a.is_final(s); });
}

std::vector<Word> enumerate_accepted(const Fsa& a, std::size_t max_len) {
  std::vector<Word> result;
  if (a.num_states() == 0) return result;

  struct Frontier {
    std::vector<Fsa::Symbol> word;
    std::vector<Fsa::State> states;
  };
  auto to_word = [&](const std::vector<Fsa::Symbol>& symbols) {
    Word w;
    w.reserve(symbols.size());
    for (auto s : symbols) w.emplace_back(a.alphabet()[s]);
    return w;
  };
  auto accepting = [&](const std::vector<Fsa::State>& states) {
    return std::any_of(states.begin(), states.end(), [&](auto s) { return a.is_final(s); });
  };

  // Parents are visited in order and children in symbol order, so each level
  // comes out sorted.
  std::vector<Frontier> level{{{}, epsilon_closure(a, {a.initial()})}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& f : level) {
      if (accepting(f.states)) result.push_back(to_word(f.word));
    }
    if (len == max_len) break;
    std::vector<Frontier> next_level;
    for (const auto& f : level) {
      for (Fsa::Symbol sym = 0; sym < a.alphabet().size(); ++sym) {
        std::vector<Fsa::State> next;
        for (auto s : f.states) {
          for (const auto& e : a.edges(s)) {
            if (e.symbol == sym) next.push_back(e.target);
          }
        }
        if (next.empty()) continue;
        Frontier child{f.word, epsilon_closure(a, std::move(next))};
        child.word.push_back(sym);
        next_level.push_back(std::move(child));
      }
    }
    if (next_level.empty()) break;
    level = std::move(next_level);
  }
  return result;
}

Fsa rename_states(const Fsa& a, std::string_view prefix) {
  const auto n = a.num_states();
  std::vector<Fsa::State> order;
  std::vector<bool> seen(n, false);
  if (n > 0) {
    std::deque<Fsa::State> queue{a.initial()};
    seen[a.initial()] = true;
    while (!queue.empty()) {
      const auto s = queue.front();
      queue.pop_front();
      order.push_back(s);
      for (const auto& e : a.edges(s)) {
        if (!seen[e.target]) {
          seen[e.target] = true;
          queue.push_back(e.target);
        }
      }
    }
  }
  for (Fsa::State s = 0; s < n; ++s) {
    if (!seen[s]) order.push_back(s);
  }
  std::vector<Fsa::State> position(n);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Fsa::State>(i);

  Fsa out(a.alphabet());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.add_state(StateTag::named(std::string(prefix) + std::to_string(i)), a.is_final(order[i]));
  }
  for (Fsa::State s = 0; s < n; ++s) {
    for (const auto& e : a.edges(s)) out.add_transition(position[s], e.symbol, position[e.target]);
  }
  if (n > 0) out.set_initial(position[a.initial()]);
  return out;
}

std::vector<std::string> merge_alphabets(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  auto merged = a;
  for (const auto& s : b) {
    if (std::find(merged.begin(), merged.end(), s) == merged.end()) merged.push_back(s);
  }
  return merged;
}

std::string to_dot(const Fsa& a, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (Fsa::State s = 0; s < a.num_states(); ++s) {
    out << "  n" << s << " [label=" << dot_quote(a.tag(s).display)
        << ", shape=" << (a.is_final(s) ? "doublecircle" : "circle") << "];\n";
  }
  if (a.num_states() > 0) out << "  __start -> n" << a.initial() << ";\n";
  for (Fsa::State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) {
      out << "  n" << s << " -> n" << e.target << " [label=" << dot_quote(a.symbol_name(e.symbol));
      if (e.symbol != Fsa::kEpsilon && a.symbol_name(e.symbol) == kQuiescence) {
        out << ", style=dashed";
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace confkit
