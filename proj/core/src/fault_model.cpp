#include <algorithm>

#include "confkit/conformance.hpp"

namespace confkit {

std::string_view to_string(Relation relation) {
  return relation == Relation::Ioco ? "ioco" : "language";
}

namespace {

AutomatonSize size_of(std::string name, const Fsa& a) {
  return {std::move(name), a.num_states(), a.num_transitions()};
}

Fsa record_product(std::vector<ProductRecord>& log, std::string_view operation,
                   std::string left_name, const Fsa& left, std::string right_name,
                   const Fsa& right) {
  Fsa result = operation == "union" ? union_of(left, right) : intersection(left, right);
  log.push_back({std::string(operation), std::move(left_name), std::move(right_name),
                 left.num_states(), right.num_states(), result.num_states()});
  return result;
}

/// Single non-final state: accepts nothing.
Fsa nothing(const std::vector<std::string>& alphabet) {
  Fsa a(alphabet);
  a.set_initial(a.add_state(StateTag::named("e0")));
  return a;
}

void check_alphabet(const Fsa& a, const TransitionSystem& spec, std::string_view what) {
  for (const auto& s : a.alphabet()) {
    if (!spec.has_label(s)) {
      throw Error(std::string(what) + " mentions '" + s + "', which is not a label of the spec");
    }
  }
}

}  // namespace

Fsa model_d(const TransitionSystem& ts) {
  if (ts.kind() != ModelKind::Iolts) throw Error("model_d needs an IOLTS");
  Fsa a(ts.alphabet());
  for (const auto& s : ts.states()) a.add_state(StateTag::named(s));
  const auto sink = a.add_state(StateTag::named("f"), true);
  a.set_initial(0);
  for (const auto& t : ts.transitions()) {
    const auto from = static_cast<Fsa::State>(*ts.state_index(t.source));
    const auto to = static_cast<Fsa::State>(*ts.state_index(t.target));
    if (t.label.visible()) {
      a.add_transition(from, t.label.name, to);
    } else {
      a.add_transition(from, Fsa::kEpsilon, to);
    }
  }
  for (Fsa::State q = 0; q < sink; ++q) {
    for (const auto& u : ts.outputs()) a.add_transition(q, u, sink);
  }
  return determinize(a);
}

FaultModel fault_model_ioco(const TransitionSystem& spec) {
  if (spec.kind() != ModelKind::Iolts) throw Error("ioco needs an IOLTS specification");
  auto spec_delta = add_quiescence(spec);
  const auto a_d = model_d(spec_delta);
  const auto a_s = determinize(induced_fsa(spec_delta));
  const auto comp_s = complement(a_s);

  std::vector<ProductRecord> products;
  auto t = record_product(products, "intersection", "complement(S)", comp_s, "D", a_d);
  std::vector<AutomatonSize> automata{size_of("D", a_d), size_of("S", a_s),
                                      size_of("complement(S)", comp_s), size_of("T", t)};
  return FaultModel{std::move(t),        Relation::Ioco,        "otr(S)·L_U", "∅",
                    std::move(spec_delta), std::move(automata), std::move(products)};
}

FaultModel fault_model_language(const TransitionSystem& spec, const Fsa& desirable,
                                const Fsa& undesirable, std::string desirable_name,
                                std::string undesirable_name) {
  check_alphabet(desirable, spec, "desirable behavior");
  check_alphabet(undesirable, spec, "undesirable behavior");
  const auto alphabet = spec.alphabet();
  const auto a_d = rename_states(determinize(extend_alphabet(desirable, merge_alphabets(desirable.alphabet(), alphabet))), "d");
  const auto a_f = rename_states(determinize(extend_alphabet(undesirable, merge_alphabets(undesirable.alphabet(), alphabet))), "f");
  const auto a_s = determinize(induced_fsa(spec));
  const auto comp_s = complement(a_s);

  std::vector<ProductRecord> products;
  std::vector<AutomatonSize> automata{size_of("D", a_d), size_of("F", a_f), size_of("S", a_s),
                                      size_of("complement(S)", comp_s)};

  std::optional<Fsa> fail_d;
  std::optional<Fsa> fail_f;
  if (!is_empty_language(a_d)) {
    auto p = record_product(products, "intersection", "complement(S)", comp_s, "D", a_d);
    automata.push_back(size_of("D∩complement(S)", p));
    if (!is_empty_language(p)) fail_d = std::move(p);
  }
  if (!is_empty_language(a_f)) {
    auto p = record_product(products, "intersection", "S", a_s, "F", a_f);
    automata.push_back(size_of("F∩S", p));
    if (!is_empty_language(p)) fail_f = std::move(p);
  }

  // A side with an empty language adds nothing to the union; leaving it out
  // keeps the other side's states and names intact.
  Fsa t = fail_d && fail_f ? record_product(products, "union", "D∩complement(S)", *fail_d,
                                            "F∩S", *fail_f)
          : fail_d         ? std::move(*fail_d)
          : fail_f         ? std::move(*fail_f)
                           : nothing(alphabet);
  automata.push_back(size_of("T", t));
  return FaultModel{std::move(t),           Relation::Language,      std::move(desirable_name),
                    std::move(undesirable_name), spec, std::move(automata), std::move(products)};
}

FaultModel fault_model_language(const TransitionSystem& spec, const LanguageOptions& options) {
  const auto alphabet = spec.alphabet();
  if (alphabet.empty() && (options.desirable || options.undesirable)) {
    throw Error("the spec has no visible labels to write expressions over");
  }
  const Regex d = options.desirable ? *options.desirable : kleene_closure(alphabet);
  const Regex f = options.undesirable ? *options.undesirable
                  : options.blank_undesirable == BlankUndesirable::Kleene ? kleene_closure(alphabet)
                                                                         : Regex::empty();
  return fault_model_language(spec, regex_to_fsa(d, alphabet), regex_to_fsa(f, alphabet),
                              d.to_string(), f.to_string());
}

}  // namespace confkit
