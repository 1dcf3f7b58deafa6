#include <deque>
#include <map>

#include "confkit/automata.hpp"

namespace confkit {

namespace {

enum class Accept { Both, Either };

/// Reachable synchronous product.  Operands must be epsilon-free and share the
/// same alphabet vector.
Fsa product(const Fsa& a, const Fsa& b, Accept accept) {
  Fsa out(a.alphabet());
  using Pair = std::pair<Fsa::State, Fsa::State>;
  std::map<Pair, Fsa::State> index;
  std::deque<Pair> work;

  auto intern = [&](Pair p) {
    if (auto it = index.find(p); it != index.end()) return it->second;
    const bool final = accept == Accept::Both ? (a.is_final(p.first) && b.is_final(p.second))
                                              : (a.is_final(p.first) || b.is_final(p.second));
    const auto id = out.add_state(StateTag::product(a.tag(p.first), b.tag(p.second)), final);
    index.emplace(p, id);
    work.push_back(p);
    return id;
  };

  out.set_initial(intern({a.initial(), b.initial()}));
  while (!work.empty()) {
    const auto [p, q] = work.front();
    work.pop_front();
    const auto from = index.at({p, q});
    for (const auto& ea : a.edges(p)) {
      for (const auto& eb : b.edges(q)) {
        if (eb.symbol < ea.symbol) continue;
        if (eb.symbol > ea.symbol) break;
        out.add_transition(from, ea.symbol, intern({ea.target, eb.target}));
      }
    }
  }
  return out;
}

Fsa prepare(const Fsa& a, const std::vector<std::string>& alphabet, bool need_complete) {
  Fsa out = a.has_epsilon() || (need_complete && !a.is_deterministic()) ? determinize(a) : a;
  out = extend_alphabet(out, alphabet);
  return need_complete ? complete(out) : out;
}

}  // namespace

Fsa intersection(const Fsa& a, const Fsa& b) {
  if (a.num_states() == 0 || b.num_states() == 0) throw Error("product of an automaton with no states");
  const auto alphabet = merge_alphabets(a.alphabet(), b.alphabet());
  // A missing move on either side already rejects, so no completion here.
  return product(prepare(a, alphabet, false), prepare(b, alphabet, false), Accept::Both);
}

Fsa union_of(const Fsa& a, const Fsa& b) {
  if (a.num_states() == 0 || b.num_states() == 0) throw Error("product of an automaton with no states");
  const auto alphabet = merge_alphabets(a.alphabet(), b.alphabet());
  return product(prepare(a, alphabet, true), prepare(b, alphabet, true), Accept::Either);
}

}  // namespace confkit
