#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "confkit/dot.hpp"
#include "confkit/regex.hpp"

namespace confkit::cli {

namespace {

using json = nlohmann::ordered_json;

/// Reported as exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

LabelingConfig labeling_of(const RunConfig& cfg) {
  if (cfg.model_kind == ModelKind::Lts && (!cfg.inputs.empty() || !cfg.outputs.empty())) {
    throw UsageError("--inputs/--outputs do not apply to --model-type lts");
  }
  LabelingConfig labeling;
  labeling.model_kind = cfg.model_kind;
  labeling.mode = cfg.label_mode;
  labeling.inputs = {cfg.inputs.begin(), cfg.inputs.end()};
  labeling.outputs = {cfg.outputs.begin(), cfg.outputs.end()};
  labeling.internal_labels = cfg.internal_labels;
  labeling.strict = cfg.strict;
  if (cfg.model_kind == ModelKind::Iolts && cfg.label_mode == LabelingConfig::Mode::Explicit &&
      labeling.inputs.empty() && labeling.outputs.empty()) {
    throw UsageError("--labels explicit needs --inputs and/or --outputs");
  }
  return labeling;
}

TransitionSystem load(const std::string& path, std::string_view role, const RunConfig& cfg,
                      std::ostream& err) {
  if (path.empty()) throw UsageError(std::string(role) + " model file is required");
  auto parsed = parse_aldebaran(read_file(path), labeling_of(cfg));
  for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w.to_string() << '\n';
  return std::move(parsed.system);
}

std::optional<Regex> regex_option(const std::optional<std::string>& text, std::string_view flag,
                                  const std::vector<std::string>& alphabet) {
  if (!text || trim(*text).empty()) return std::nullopt;
  try {
    return parse_regex(*text, alphabet);
  } catch (const RegexError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

LanguageOptions language_of(const RunConfig& cfg, const TransitionSystem& spec) {
  const auto alphabet = spec.alphabet();
  return {regex_option(cfg.desirable, "--desirable", alphabet),
          regex_option(cfg.undesirable, "--undesirable", alphabet), cfg.blank_undesirable};
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string braces(const std::vector<std::string>& items) { return "{" + join(items, ", ") + "}"; }

json to_json(const Verdict& v, bool timing) {
  json cases = json::array();
  for (const auto& tc : v.test_cases) {
    cases.push_back({{"faultWord", tc.fault_word},
                     {"stimulusPrefix", tc.stimulus_prefix},
                     {"expectedOutputs", tc.expected_outputs},
                     {"observedOutput", tc.observed_output ? json(*tc.observed_output) : json()},
                     {"specPath", tc.spec_path},
                     {"iutPath", tc.iut_path}});
  }
  json covered = json::array();
  for (const auto& t : v.covered_spec_transitions) {
    covered.push_back({{"source", t.source}, {"label", t.label.name}, {"target", t.target}});
  }
  json automata = json::array();
  for (const auto& a : v.automata) {
    automata.push_back({{"name", a.name}, {"states", a.states}, {"transitions", a.transitions}});
  }
  json products = json::array();
  for (const auto& p : v.products) {
    products.push_back({{"operation", p.operation},
                        {"left", p.left},
                        {"right", p.right},
                        {"leftStates", p.left_states},
                        {"rightStates", p.right_states},
                        {"resultStates", p.result_states}});
  }
  json report = {{"relation", std::string(to_string(v.relation))},
                 {"conforms", v.conforms},
                 {"testCases", std::move(cases)},
                 {"coveredSpecTransitions", std::move(covered)},
                 {"stats", {{"automata", std::move(automata)}, {"products", std::move(products)}}},
                 {"warnings", v.warnings}};
  if (timing) report["timing"] = {{"elapsedMs", v.elapsed_ms}};
  return report;
}

void print_text(const Verdict& v, const TransitionSystem& spec, bool timing, std::ostream& out) {
  out << "relation: " << to_string(v.relation) << '\n';
  out << "verdict: " << (v.conforms ? "conforms" : "does not conform") << '\n';
  if (!v.conforms) {
    out << "test cases: " << v.test_cases.size() << '\n';
    for (std::size_t i = 0; i < v.test_cases.size(); ++i) {
      const auto& tc = v.test_cases[i];
      out << "  [" << i + 1 << "] ";
      if (v.relation == Relation::Ioco) {
        out << "prefix: " << render_word(tc.stimulus_prefix) << "  observed: " << *tc.observed_output
            << "  expected: " << braces(tc.expected_outputs) << '\n';
      } else {
        out << "word: " << render_word(tc.fault_word) << '\n';
      }
      out << "      spec path: " << join(tc.spec_path, " -> ") << '\n';
      out << "      iut path:  " << join(tc.iut_path, " -> ") << '\n';
    }
    std::size_t total = 0;
    for (const auto& t : spec.transitions()) total += t.label.kind != LabelKind::Quiescence;
    out << "covered spec transitions: " << v.covered_spec_transitions.size() << '/' << total << '\n';
  }
  for (const auto& a : v.automata) {
    out << "automaton " << a.name << ": " << a.states << " states, " << a.transitions
        << " transitions\n";
  }
  if (timing) out << "elapsed: " << v.elapsed_ms << " ms\n";
}

int report(const Verdict& v, const RunConfig& cfg, const TransitionSystem& spec, std::ostream& out,
           std::ostream& err) {
  for (const auto& w : v.warnings) err << "warning: " << w << '\n';
  if (cfg.format == Format::Json) {
    out << to_json(v, cfg.timing).dump(2) << '\n';
  } else {
    print_text(v, spec, cfg.timing, out);
  }
  return v.conforms ? kConforms : kDoesNotConform;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

void write_dot(const std::string& dot, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.out_path) {
    out << dot;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + *cfg.out_path + "'");
  file << dot;
}

}  // namespace

std::set<std::string> parse_internal_labels(const std::string& value) {
  std::set<std::string> labels;
  std::stringstream in(value);
  for (std::string item; std::getline(in, item, ',');) {
    if (auto t = trim(item); !t.empty()) labels.insert(t);
  }
  return labels;
}

std::string render_word(const Word& word) { return word.empty() ? "ε" : join(word, " "); }

int cmd_check_ioco(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.model_kind != ModelKind::Iolts) throw UsageError("check-ioco needs --model-type iolts");
    const auto spec = load(cfg.spec_path, "--spec", cfg, err);
    const auto iut = load(cfg.iut_path, "--iut", cfg, err);
    const auto v = verify_ioco(spec, iut, {cfg.bound});
    return report(v, cfg, spec, out, err);
  });
}

int cmd_check_lang(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = load(cfg.spec_path, "--spec", cfg, err);
    const auto iut = load(cfg.iut_path, "--iut", cfg, err);
    const auto v = verify_language(spec, iut, language_of(cfg, spec), {cfg.bound});
    return report(v, cfg, spec, out, err);
  });
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = load(cfg.spec_path, "model", cfg, err);
    std::string dot;
    if (cfg.what == "model") {
      dot = to_dot(spec);
    } else if (cfg.what == "induced") {
      dot = to_dot(induced_fsa(spec), "induced");
    } else if (cfg.what == "fault-ioco") {
      if (spec.kind() != ModelKind::Iolts) throw UsageError("fault-ioco needs --model-type iolts");
      dot = to_dot(fault_model_ioco(spec).automaton, "fault_ioco");
    } else if (cfg.what == "fault-lang") {
      dot = to_dot(fault_model_language(spec, language_of(cfg, spec)).automaton, "fault_lang");
    } else {
      throw UsageError("unknown --what '" + cfg.what + "'");
    }
    write_dot(dot, cfg, out);
    return kConforms;
  });
}

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ts = load(cfg.spec_path, "model", cfg, err);
    const bool iolts = ts.kind() == ModelKind::Iolts;
    std::vector<std::string> quiescent;
    if (iolts) {
      // Declaration order reads better than name order.
      const auto q = quiescent_states(ts);
      for (const auto& s : ts.states()) {
        if (q.count(s) != 0) quiescent.push_back(s);
      }
    }
    const std::vector<std::string> inputs(ts.inputs().begin(), ts.inputs().end());
    const std::vector<std::string> outputs(ts.outputs().begin(), ts.outputs().end());
    if (cfg.format == Format::Json) {
      json info = {{"modelType", iolts ? "iolts" : "lts"},
                   {"initial", ts.initial()},
                   {"states", ts.states().size()},
                   {"transitions", ts.transitions().size()}};
      if (iolts) {
        info["inputs"] = inputs;
        info["outputs"] = outputs;
        info["quiescent"] = quiescent;
      } else {
        info["labels"] = inputs;
      }
      info["deterministic"] = ts.is_deterministic();
      out << info.dump(2) << '\n';
    } else {
      out << "model type: " << (iolts ? "iolts" : "lts") << '\n';
      out << "initial: " << ts.initial() << '\n';
      out << "states: " << ts.states().size() << '\n';
      out << "transitions: " << ts.transitions().size() << '\n';
      if (iolts) {
        out << "inputs: " << braces(inputs) << '\n';
        out << "outputs: " << braces(outputs) << '\n';
        out << "quiescent: " << braces(quiescent) << '\n';
      } else {
        out << "labels: " << braces(inputs) << '\n';
      }
      out << "deterministic: " << (ts.is_deterministic() ? "yes" : "no") << '\n';
    }
    return kConforms;
  });
}

}  // namespace confkit::cli
