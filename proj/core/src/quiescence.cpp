#include "confkit/models.hpp"

namespace confkit {

std::set<std::string> quiescent_states(const TransitionSystem& ts) {
  if (ts.kind() != ModelKind::Iolts) {
    throw Error("quiescence is only defined for IOLTS models");
  }
  std::set<std::string> active;
  for (const auto& t : ts.transitions()) {
    if (t.label.kind != LabelKind::Input) active.insert(t.source);
  }
  std::set<std::string> quiescent;
  for (const auto& s : ts.states()) {
    if (!active.contains(s)) quiescent.insert(s);
  }
  return quiescent;
}

TransitionSystem add_quiescence(const TransitionSystem& ts) {
  if (ts.kind() != ModelKind::Iolts) {
    throw Error("quiescence is only defined for IOLTS models");
  }
  if (ts.has_label(kQuiescence)) {
    throw Error("model already carries the quiescence label 'delta'");
  }
  auto transitions = ts.transitions();
  for (const auto& s : quiescent_states(ts)) {
    transitions.push_back(Transition{s, Label{std::string(kQuiescence), LabelKind::Quiescence}, s});
  }
  auto outputs = ts.outputs();
  outputs.emplace(kQuiescence);
  return TransitionSystem(ts.kind(), ts.states(), ts.initial(), ts.inputs(), std::move(outputs),
                          std::move(transitions));
}

}  // namespace confkit
