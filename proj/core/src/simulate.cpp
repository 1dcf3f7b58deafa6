#include "simulate.hpp"

#include <algorithm>

namespace confkit::detail {

Simulator::Simulator(const TransitionSystem& ts, bool derive_quiescence)
    : ts_(ts),
      derive_quiescence_(derive_quiescence && ts.kind() == ModelKind::Iolts),
      visible_(ts.states().size()),
      internal_(ts.states().size()),
      quiescent_(ts.states().size(), ts.kind() == ModelKind::Iolts) {
  for (const auto& t : ts.transitions()) {
    const auto from = *ts.state_index(t.source);
    const auto to = *ts.state_index(t.target);
    if (t.label.kind == LabelKind::Internal) {
      internal_[from].push_back(to);
      quiescent_[from] = false;
    } else {
      visible_[from].emplace_back(t.label.name, to);
      if (t.label.kind != LabelKind::Input) quiescent_[from] = false;
    }
  }
}

Simulator::StateSet Simulator::initial() const { return closure({0}); }

Simulator::StateSet Simulator::closure(StateSet states) const {
  std::vector<bool> in(internal_.size(), false);
  std::vector<std::size_t> stack;
  for (auto s : states) {
    if (!in[s]) {
      in[s] = true;
      stack.push_back(s);
    }
  }
  StateSet out;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    out.push_back(s);
    for (auto t : internal_[s]) {
      if (!in[t]) {
        in[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Simulator::StateSet Simulator::after(const StateSet& states, const std::string& label) const {
  StateSet next;
  if (derive_quiescence_ && label == kQuiescence) {
    for (auto s : states) {
      if (quiescent_[s]) next.push_back(s);
    }
    return next;
  }
  for (auto s : states) {
    for (const auto& [name, target] : visible_[s]) {
      if (name == label) next.push_back(target);
    }
  }
  return closure(std::move(next));
}

std::vector<std::string> Simulator::out(const StateSet& states) const {
  std::set<std::string> enabled;
  bool delta = false;
  for (auto s : states) {
    for (const auto& [name, target] : visible_[s]) {
      if (ts_.outputs().count(name) != 0) enabled.insert(name);
    }
    delta = delta || (derive_quiescence_ && quiescent_[s]);
  }
  std::vector<std::string> result;
  for (const auto& label : ts_.alphabet()) {
    if (enabled.count(label) != 0) result.push_back(label);
  }
  if (delta) result.emplace_back(kQuiescence);
  return result;
}

std::vector<Transition> Simulator::moves(const StateSet& states, const std::string& label,
                                         const StateSet& next) const {
  std::vector<Transition> result;
  for (const auto& t : ts_.transitions()) {
    if (t.label.name != label || !t.label.visible()) continue;
    const auto from = *ts_.state_index(t.source);
    const auto to = *ts_.state_index(t.target);
    if (std::binary_search(states.begin(), states.end(), from) &&
        std::binary_search(next.begin(), next.end(), to)) {
      result.push_back(t);
    }
  }
  return result;
}

std::string Simulator::render(const StateSet& states) const {
  if (states.size() == 1) return ts_.states()[states.front()];
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i != 0) out += ',';
    out += ts_.states()[states[i]];
  }
  return out + "}";
}

}  // namespace confkit::detail
