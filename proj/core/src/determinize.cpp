#include <algorithm>
#include <deque>
#include <map>

#include "confkit/automata.hpp"

namespace confkit {

namespace {

/// States that can move on a symbol or accept.  Two closures with the same
/// important members accept the same language from here on.
std::vector<Fsa::State> important_part(const Fsa& a, const std::vector<Fsa::State>& closure) {
  std::vector<Fsa::State> out;
  for (auto s : closure) {
    const auto edges = a.edges(s);
    const bool moves = std::any_of(edges.begin(), edges.end(),
                                   [](const Fsa::Edge& e) { return e.symbol != Fsa::kEpsilon; });
    if (moves || a.is_final(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

Fsa determinize(const Fsa& a) {
  Fsa out(a.alphabet());
  if (a.num_states() == 0) return out;

  std::map<std::vector<Fsa::State>, Fsa::State> index;
  std::deque<std::vector<Fsa::State>> work;

  auto intern = [&](std::vector<Fsa::State> key) -> Fsa::State {
    if (auto it = index.find(key); it != index.end()) return it->second;
    std::vector<StateTag> members;
    members.reserve(key.size());
    bool final = false;
    for (auto s : key) {
      members.push_back(a.tag(s));
      final = final || a.is_final(s);
    }
    const auto id = out.add_state(StateTag::subset(members), final);
    index.emplace(key, id);
    work.push_back(std::move(key));
    return id;
  };

  out.set_initial(intern(important_part(a, epsilon_closure(a, {a.initial()}))));
  while (!work.empty()) {
    const auto key = std::move(work.front());
    work.pop_front();
    const auto from = index.at(key);
    for (Fsa::Symbol sym = 0; sym < a.alphabet().size(); ++sym) {
      std::vector<Fsa::State> next;
      for (auto s : key) {
        for (const auto& e : a.edges(s)) {
          if (e.symbol == sym) next.push_back(e.target);
        }
      }
      if (next.empty()) continue;
      auto target_key = important_part(a, epsilon_closure(a, std::move(next)));
      // A closure with no important member is a dead end.
      if (target_key.empty()) continue;
      out.add_transition(from, sym, intern(std::move(target_key)));
    }
  }
  return out;
}

Fsa extend_alphabet(const Fsa& a, const std::vector<std::string>& alphabet) {
  for (const auto& s : a.alphabet()) {
    if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) {
      throw Error("alphabet extension drops symbol '" + s + "'");
    }
  }
  if (alphabet == a.alphabet()) return a;
  Fsa out(alphabet);
  for (Fsa::State s = 0; s < a.num_states(); ++s) out.add_state(a.tag(s), a.is_final(s));
  for (Fsa::State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) {
      if (e.symbol == Fsa::kEpsilon) {
        out.add_transition(s, Fsa::kEpsilon, e.target);
      } else {
        out.add_transition(s, a.alphabet()[e.symbol], e.target);
      }
    }
  }
  if (a.num_states() > 0) out.set_initial(a.initial());
  return out;
}

Fsa complete(const Fsa& a) {
  if (!a.is_deterministic()) throw Error("completion requires a deterministic automaton");
  if (a.is_complete()) return a;

  Fsa out = a;
  const auto dead = out.add_state(StateTag::named("c"), false);
  const auto symbols = static_cast<Fsa::Symbol>(a.alphabet().size());
  for (Fsa::State s = 0; s < out.num_states(); ++s) {
    for (Fsa::Symbol sym = 0; sym < symbols; ++sym) {
      if (!out.successor(s, sym)) out.add_transition(s, sym, dead);
    }
  }
  if (a.num_states() == 0) out.set_initial(dead);
  return out;
}

Fsa complement(const Fsa& a) {
  Fsa out = complete(a.is_deterministic() ? a : determinize(a));
  for (Fsa::State s = 0; s < out.num_states(); ++s) out.set_final(s, !out.is_final(s));
  return out;
}

}  // namespace confkit
