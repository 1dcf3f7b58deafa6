#include <algorithm>
#include <chrono>

#include "confkit/conformance.hpp"

namespace confkit {

namespace {

using Clock = std::chrono::steady_clock;

std::set<std::string> visible_labels(const TransitionSystem& ts) {
  const auto alphabet = ts.alphabet();
  return {alphabet.begin(), alphabet.end()};
}

Verdict finish(const FaultModel& fm, const TransitionSystem& iut_used, const Fsa& a_i,
               Relation relation, const VerifyOptions& options, Clock::time_point started) {
  Verdict v;
  v.relation = relation;
  v.automata = fm.automata;
  v.products = fm.products;
  v.automata.push_back({"I", a_i.num_states(), a_i.num_transitions()});

  const auto b = intersection(fm.automaton, a_i);
  v.products.push_back({"intersection", "T", "I", fm.automaton.num_states(), a_i.num_states(),
                        b.num_states()});
  v.automata.push_back({"T∩I", b.num_states(), b.num_transitions()});

  v.conforms = is_empty_language(b);
  if (!v.conforms) {
    auto suite = extract_test_suite(b, fm.spec, iut_used, relation, options.bound);
    v.test_cases = std::move(suite.cases);
    v.covered_spec_transitions = std::move(suite.covered_spec_transitions);
    v.warnings = std::move(suite.warnings);
  }
  v.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
  return v;
}

}  // namespace

Verdict verify_ioco(const TransitionSystem& spec, const TransitionSystem& iut,
                    const VerifyOptions& options) {
  const auto started = Clock::now();
  if (spec.kind() != ModelKind::Iolts || iut.kind() != ModelKind::Iolts) {
    throw Error("ioco needs IOLTS models");
  }
  if (spec.inputs() != iut.inputs() || spec.outputs() != iut.outputs()) {
    throw Error("spec and implementation have different input/output labels");
  }
  const auto fm = fault_model_ioco(spec);
  const auto iut_delta = add_quiescence(iut);
  const auto a_i = determinize(induced_fsa(iut_delta));
  return finish(fm, iut_delta, a_i, Relation::Ioco, options, started);
}

Verdict verify_language(const TransitionSystem& iut, const FaultModel& fault_model,
                        const VerifyOptions& options) {
  const auto started = Clock::now();
  if (visible_labels(fault_model.spec) != visible_labels(iut)) {
    throw Error("spec and implementation have different labels");
  }
  const auto a_i = determinize(induced_fsa(iut));
  return finish(fault_model, iut, a_i, Relation::Language, options, started);
}

Verdict verify_language(const TransitionSystem& spec, const TransitionSystem& iut,
                        const LanguageOptions& language, const VerifyOptions& options) {
  const auto started = Clock::now();
  if (visible_labels(spec) != visible_labels(iut)) {
    throw Error("spec and implementation have different labels");
  }
  const auto fm = fault_model_language(spec, language);
  const auto a_i = determinize(induced_fsa(iut));
  return finish(fm, iut, a_i, Relation::Language, options, started);
}

}  // namespace confkit
