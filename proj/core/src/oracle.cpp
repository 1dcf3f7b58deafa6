#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "confkit/conformance.hpp"
#include "simulate.hpp"

namespace confkit {

namespace {

using detail::Simulator;
using StateSet = Simulator::StateSet;

class NoWords final : public WordLanguage {
 public:
  State start() override { return kDead; }
  State step(State, const std::string&) override { return kDead; }
  bool accepting(State) override { return false; }
};

class RegexWords final : public WordLanguage {
 public:
  explicit RegexWords(Regex regex) : root_(std::move(regex)) {}

  State start() override { return intern(root_); }

  State step(State state, const std::string& symbol) override {
    if (state == kDead) return kDead;
    return intern(derivative(states_.at(state), symbol));
  }

  bool accepting(State state) override { return state != kDead && nullable(states_.at(state)); }

 private:
  State intern(const Regex& r) {
    if (r.kind() == Regex::Kind::Empty) return kDead;
    auto [it, fresh] = index_.try_emplace(r.to_string(), states_.size());
    if (fresh) states_.push_back(r);
    return it->second;
  }

  Regex root_;
  std::vector<Regex> states_;
  std::map<std::string, State> index_;
};

/// otr(ts) L_U: a state is the set reached so far plus whether the last
/// symbol was an output read from a trace.
class TraceOutputWords final : public WordLanguage {
 public:
  explicit TraceOutputWords(TransitionSystem ts) : ts_(std::move(ts)), sim_(ts_, false) {}

  State start() override { return intern({sim_.initial(), false}); }

  State step(State state, const std::string& symbol) override {
    if (state == kDead) return kDead;
    const auto& [set, _] = states_.at(state);
    const bool output = !set.empty() && ts_.outputs().count(symbol) != 0;
    auto next = set.empty() ? StateSet{} : sim_.after(set, symbol);
    if (next.empty() && !output) return kDead;
    return intern({std::move(next), output});
  }

  bool accepting(State state) override { return state != kDead && states_.at(state).second; }

 private:
  using Key = std::pair<StateSet, bool>;

  State intern(Key key) {
    auto [it, fresh] = index_.try_emplace(key, states_.size());
    if (fresh) states_.push_back(std::move(key));
    return it->second;
  }

  TransitionSystem ts_;
  Simulator sim_;
  std::vector<Key> states_;
  std::map<Key, State> index_;
};

bool contains(const std::vector<std::string>& sorted_superset, const std::vector<std::string>& subset) {
  return std::all_of(subset.begin(), subset.end(), [&](const std::string& s) {
    return std::find(sorted_superset.begin(), sorted_superset.end(), s) != sorted_superset.end();
  });
}

}  // namespace

std::unique_ptr<WordLanguage> empty_language() { return std::make_unique<NoWords>(); }

std::unique_ptr<WordLanguage> regex_language(Regex regex) {
  return std::make_unique<RegexWords>(std::move(regex));
}

std::unique_ptr<WordLanguage> trace_output_language(const TransitionSystem& ts) {
  return std::make_unique<TraceOutputWords>(ts);
}

bool oracle_ioco(const TransitionSystem& spec, const TransitionSystem& iut, std::size_t k) {
  if (spec.kind() != ModelKind::Iolts || iut.kind() != ModelKind::Iolts) {
    throw Error("ioco needs IOLTS models");
  }
  if (spec.has_label(kQuiescence) || iut.has_label(kQuiescence)) {
    throw Error("the ioco oracle derives quiescence itself; models must not contain delta");
  }
  const Simulator s(spec, true);
  const Simulator i(iut, true);
  auto labels = spec.alphabet();
  labels.emplace_back(kQuiescence);

  using Node = std::pair<StateSet, StateSet>;
  std::set<Node> seen;
  std::vector<Node> level{{s.initial(), i.initial()}};
  seen.insert(level.front());
  for (std::size_t depth = 0;; ++depth) {
    for (const auto& [ss, is] : level) {
      if (!contains(s.out(ss), i.out(is))) return false;
    }
    if (depth == k) return true;
    std::vector<Node> next_level;
    for (const auto& [ss, is] : level) {
      for (const auto& l : labels) {
        auto ss2 = s.after(ss, l);
        if (ss2.empty()) continue;  // only spec traces count
        auto is2 = i.after(is, l);
        if (is2.empty()) continue;  // nothing left to observe
        Node node{std::move(ss2), std::move(is2)};
        if (seen.insert(node).second) next_level.push_back(std::move(node));
      }
    }
    if (next_level.empty()) return true;
    level = std::move(next_level);
  }
}

bool oracle_language(const TransitionSystem& spec, const TransitionSystem& iut,
                     WordLanguage& desirable, WordLanguage& undesirable, std::size_t k) {
  const Simulator s(spec, false);
  const Simulator i(iut, false);
  const auto labels = iut.alphabet();

  using Node = std::tuple<StateSet, StateSet, WordLanguage::State, WordLanguage::State>;
  std::set<Node> seen;
  std::vector<Node> level{{i.initial(), s.initial(), desirable.start(), undesirable.start()}};
  seen.insert(level.front());
  for (std::size_t depth = 0;; ++depth) {
    for (const auto& [is, ss, d, f] : level) {
      if (desirable.accepting(d) && ss.empty()) return false;
      if (undesirable.accepting(f) && !ss.empty()) return false;
    }
    if (depth == k) return true;
    std::vector<Node> next_level;
    for (const auto& [is, ss, d, f] : level) {
      for (const auto& l : labels) {
        auto is2 = i.after(is, l);
        if (is2.empty()) continue;  // only implementation traces count
        const auto d2 = desirable.step(d, l);
        const auto f2 = undesirable.step(f, l);
        if (d2 == WordLanguage::kDead && f2 == WordLanguage::kDead) continue;
        auto ss2 = ss.empty() ? StateSet{} : s.after(ss, l);
        Node node{std::move(is2), std::move(ss2), d2, f2};
        if (seen.insert(node).second) next_level.push_back(std::move(node));
      }
    }
    if (next_level.empty()) return true;
    level = std::move(next_level);
  }
}

std::size_t oracle_bound(std::size_t spec_states, std::size_t iut_states, std::size_t d_states,
                         std::size_t f_states, std::size_t cap) {
  std::size_t k = 1;
  for (auto n : {spec_states, iut_states, d_states, f_states}) {
    k *= n + 1;
    if (k >= cap) return cap;
  }
  return k;
}

bool oracle_is_trace(const TransitionSystem& ts, const Word& word) {
  const Simulator sim(ts, false);
  auto set = sim.initial();
  for (const auto& l : word) {
    set = sim.after(set, l);
    if (set.empty()) return false;
  }
  return true;
}

std::set<std::string> oracle_out_after(const TransitionSystem& ts, const Word& prefix) {
  const Simulator sim(ts, !ts.has_label(kQuiescence));
  auto set = sim.initial();
  for (const auto& l : prefix) {
    set = sim.after(set, l);
    if (set.empty()) return {};
  }
  const auto out = sim.out(set);
  return {out.begin(), out.end()};
}

}  // namespace confkit
