#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "confkit/conformance.hpp"
#include "simulate.hpp"

namespace confkit {

namespace {

using detail::Simulator;
using StateSet = Simulator::StateSet;
using EdgeKey = std::tuple<Fsa::State, Fsa::Symbol, Fsa::State>;

/// Paths explored before enumeration gives up and reports what it has.
constexpr std::size_t kMaxPaths = 200000;

struct Path {
  std::vector<Fsa::State> states;  // one more than symbols
  std::vector<Fsa::Symbol> symbols;
  /// Position identities used for the no-repeat rule, one per state.
  std::vector<std::size_t> configs;
  bool looped = false;
  StateSet spec;
  StateSet iut;
};

/// What counts as "the same place" on a path.  In ioco mode the fault model
/// splits a spec state into copies that differ only in whether the fault sink
/// was just reached, so positions are compared by the pair of model state
/// sets; in language mode the product state itself is used.
class Configurations {
 public:
  explicit Configurations(Relation relation) : relation_(relation) {}

  std::size_t of(Fsa::State b_state, const StateSet& spec, const StateSet& iut) {
    if (relation_ == Relation::Language) return b_state;
    return index_.try_emplace({spec, iut}, index_.size()).first->second;
  }

 private:
  Relation relation_;
  std::map<std::pair<StateSet, StateSet>, std::size_t> index_;
};

Word word_of(const Fsa& b, const std::vector<Fsa::Symbol>& symbols) {
  Word w;
  w.reserve(symbols.size());
  for (auto s : symbols) w.emplace_back(b.alphabet()[s]);
  return w;
}

/// State sets of `sim` after each prefix of `word`, starting with the initial
/// set; stops early (shorter result) once the set becomes empty.
std::vector<StateSet> walk(const Simulator& sim, const Word& word, std::size_t steps) {
  std::vector<StateSet> sets{sim.initial()};
  for (std::size_t i = 0; i < steps; ++i) {
    auto next = sim.after(sets.back(), word[i]);
    if (next.empty()) break;
    sets.push_back(std::move(next));
  }
  return sets;
}

struct Enumeration {
  std::vector<Path> accepted;  // canonical order
  bool truncated = false;
};

Enumeration enumerate_paths(const Fsa& b, const Simulator& spec, const Simulator& iut,
                            Relation relation, std::size_t bound) {
  Enumeration result;
  Configurations configs(relation);
  Path root{{b.initial()}, {}, {}, false, spec.initial(), iut.initial()};
  root.configs.push_back(configs.of(b.initial(), root.spec, root.iut));
  std::vector<Path> level{std::move(root)};
  std::size_t explored = 1;
  for (std::size_t len = 0; !level.empty(); ++len) {
    for (const auto& p : level) {
      if (b.is_final(p.states.back())) result.accepted.push_back(p);
    }
    if (len == bound) break;
    std::vector<Path> next_level;
    for (const auto& p : level) {
      for (const auto& e : b.edges(p.states.back())) {
        const auto& label = b.alphabet()[e.symbol];
        auto spec_next = p.spec.empty() ? StateSet{} : spec.after(p.spec, label);
        auto iut_next = iut.after(p.iut, label);
        const auto config = configs.of(e.target, spec_next, iut_next);
        const bool self_loop = config == p.configs.back();
        // Observing quiescence where it changes nothing says nothing new.
        if (self_loop && (p.looped || label == kQuiescence)) continue;
        if (!self_loop &&
            std::find(p.configs.begin(), p.configs.end(), config) != p.configs.end()) {
          continue;
        }
        if (++explored > kMaxPaths) {
          result.truncated = true;
          return result;
        }
        Path child{p.states, p.symbols, p.configs, p.looped || self_loop, std::move(spec_next),
                   std::move(iut_next)};
        child.states.push_back(e.target);
        child.symbols.push_back(e.symbol);
        child.configs.push_back(config);
        next_level.push_back(std::move(child));
      }
    }
    level = std::move(next_level);
  }
  return result;
}

/// Shortest accepted path, ignoring the candidate restrictions.
std::optional<Path> shortest_accepted(const Fsa& b) {
  std::vector<std::optional<std::pair<Fsa::State, Fsa::Symbol>>> parent(b.num_states());
  std::vector<bool> seen(b.num_states(), false);
  std::deque<Fsa::State> queue{b.initial()};
  seen[b.initial()] = true;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    if (b.is_final(s)) {
      Path p;
      for (auto at = s;;) {
        p.states.push_back(at);
        if (!parent[at]) break;
        p.symbols.push_back(parent[at]->second);
        at = parent[at]->first;
      }
      std::reverse(p.states.begin(), p.states.end());
      std::reverse(p.symbols.begin(), p.symbols.end());
      return p;
    }
    for (const auto& e : b.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        parent[e.target] = std::pair{s, e.symbol};
        queue.push_back(e.target);
      }
    }
  }
  return std::nullopt;
}

std::vector<EdgeKey> edges_between(const Path& p, std::size_t from, std::size_t to) {
  std::vector<EdgeKey> key;
  for (std::size_t i = from; i < to; ++i) key.emplace_back(p.states[i], p.symbols[i], p.states[i + 1]);
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

std::vector<std::string> render_all(const Simulator& sim, const std::vector<StateSet>& sets) {
  std::vector<std::string> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(sim.render(s));
  return out;
}

}  // namespace

TestSuite extract_test_suite(const Fsa& b, const TransitionSystem& spec,
                             const TransitionSystem& iut, Relation relation, Bound bound) {
  TestSuite suite;
  if (is_empty_language(b)) return suite;

  const Simulator spec_sim(spec, false);
  const Simulator iut_sim(iut, false);
  const auto limit = bound.value_or(b.num_states());

  auto enumeration = enumerate_paths(b, spec_sim, iut_sim, relation, limit);
  if (enumeration.truncated) {
    suite.warnings.push_back("test-suite enumeration stopped after " + std::to_string(kMaxPaths) +
                             " paths; the suite may be incomplete");
  }
  if (enumeration.accepted.empty()) {
    auto p = shortest_accepted(b);
    suite.warnings.push_back("bound " + std::to_string(limit) +
                             " admits no fault word; reporting the shortest one (length " +
                             std::to_string(p->symbols.size()) + ")");
    enumeration.accepted.push_back(std::move(*p));
  }

  // Group key -> product-edge sets of the words kept so far.
  std::map<std::pair<std::string, std::string>, std::vector<std::vector<EdgeKey>>> groups;

  for (const auto& path : enumeration.accepted) {
    const auto word = word_of(b, path.symbols);
    const auto n = word.size();
    TestCase tc;
    tc.fault_word = word;

    std::pair<std::string, std::string> group;
    std::vector<EdgeKey> key;
    std::vector<StateSet> spec_sets;
    if (relation == Relation::Ioco) {
      if (n == 0) continue;  // cannot happen: every ioco fault ends in an output
      tc.stimulus_prefix.assign(word.begin(), word.end() - 1);
      tc.observed_output = word.back();
      spec_sets = walk(spec_sim, word, n - 1);
      const auto& after_prefix = spec_sets.back();
      tc.expected_outputs = spec_sim.out(after_prefix);
      group = {spec_sim.render(after_prefix), word.back()};
      key = edges_between(path, 0, n - 1);
    } else {
      tc.stimulus_prefix = word;
      spec_sets = walk(spec_sim, word, n);
      const auto reached = spec_sets.size() - 1;  // symbols read inside otr(spec)
      group = {std::to_string(path.states.back()), {}};
      key = edges_between(path, reached < n ? reached : 0, n);
    }

    auto& kept = groups[group];
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
      return std::includes(k.begin(), k.end(), key.begin(), key.end());
    });
    if (redundant) continue;
    kept.push_back(std::move(key));

    tc.spec_path = render_all(spec_sim, spec_sets);
    tc.iut_path = render_all(iut_sim, walk(iut_sim, word, n));
    for (std::size_t i = 0; i + 1 < spec_sets.size(); ++i) {
      if (word[i] == kQuiescence) continue;
      for (auto& t : spec_sim.moves(spec_sets[i], word[i], spec_sets[i + 1])) {
        suite.covered_spec_transitions.insert(std::move(t));
      }
    }
    suite.cases.push_back(std::move(tc));
  }
  return suite;
}

}  // namespace confkit
