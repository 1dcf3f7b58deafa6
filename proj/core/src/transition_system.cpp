#include <algorithm>
#include <map>
#include <unordered_set>

#include "confkit/models.hpp"

namespace confkit {

namespace {

void check_kind(const Label& label, const std::set<std::string>& inputs,
                const std::set<std::string>& outputs) {
  switch (label.kind) {
    case LabelKind::Internal:
      if (inputs.contains(label.name) || outputs.contains(label.name)) {
        throw Error("internal label '" + label.name + "' is also a visible label");
      }
      return;
    case LabelKind::Quiescence:
      if (label.name != kQuiescence || !outputs.contains(label.name)) {
        throw Error("quiescence label must be the output '" + std::string(kQuiescence) + "'");
      }
      return;
    case LabelKind::Input:
      if (!inputs.contains(label.name)) {
        throw Error("label '" + label.name + "' is not a declared input");
      }
      return;
    case LabelKind::Output:
      if (!outputs.contains(label.name) || label.name == kQuiescence) {
        throw Error("label '" + label.name + "' is not a declared output");
      }
      return;
  }
}

}  // namespace

TransitionSystem::TransitionSystem(ModelKind kind, std::vector<std::string> states,
                                   std::string initial, std::set<std::string> inputs,
                                   std::set<std::string> outputs,
                                   std::vector<Transition> transitions)
    : kind_(kind),
      initial_(std::move(initial)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      transitions_(std::move(transitions)) {
  // Initial first, then declaration order, no duplicates.
  std::unordered_set<std::string> seen;
  states_.push_back(initial_);
  seen.insert(initial_);
  bool initial_declared = states.empty();
  for (auto& s : states) {
    if (s == initial_) initial_declared = true;
    if (seen.insert(s).second) states_.push_back(std::move(s));
  }
  if (!initial_declared) {
    throw Error("initial state '" + initial_ + "' is not a state of the model");
  }
  if (initial_.empty()) throw Error("empty initial state name");

  for (const auto& name : inputs_) {
    if (outputs_.contains(name)) {
      throw Error("label '" + name + "' is both an input and an output");
    }
  }
  if (kind_ == ModelKind::Lts && !outputs_.empty()) {
    throw Error("an LTS has no output partition");
  }
  if (inputs_.contains(std::string(kQuiescence))) {
    throw Error("'delta' is reserved for quiescence and cannot be an input");
  }

  for (const auto& t : transitions_) {
    if (!seen.contains(t.source)) throw Error("unknown source state '" + t.source + "'");
    if (!seen.contains(t.target)) throw Error("unknown target state '" + t.target + "'");
    if (t.label.name.empty()) throw Error("empty label");
    check_kind(t.label, inputs_, outputs_);
  }
  std::sort(transitions_.begin(), transitions_.end(), [](const Transition& a, const Transition& b) {
    return std::tie(a.source, a.label.name, a.label.kind, a.target) <
           std::tie(b.source, b.label.name, b.label.kind, b.target);
  });
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
}

std::vector<std::string> TransitionSystem::alphabet() const {
  std::vector<std::string> out(inputs_.begin(), inputs_.end());
  for (const auto& o : outputs_) {
    if (o != kQuiescence) out.push_back(o);
  }
  if (outputs_.contains(std::string(kQuiescence))) out.emplace_back(kQuiescence);
  return out;
}

bool TransitionSystem::has_state(std::string_view name) const {
  return state_index(name).has_value();
}

std::optional<std::size_t> TransitionSystem::state_index(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

bool TransitionSystem::has_label(std::string_view name) const {
  std::string key(name);
  return inputs_.contains(key) || outputs_.contains(key);
}

bool TransitionSystem::has_internal_transitions() const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [](const Transition& t) { return !t.label.visible(); });
}

bool TransitionSystem::is_deterministic() const {
  if (has_internal_transitions()) return false;
  std::map<std::pair<std::string_view, std::string_view>, int> fanout;
  for (const auto& t : transitions_) {
    if (++fanout[{t.source, t.label.name}] > 1) return false;
  }
  return true;
}

}  // namespace confkit
