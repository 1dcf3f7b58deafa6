#include <charconv>
#include <map>
#include <sstream>
#include <unordered_set>

#include "confkit/models.hpp"

namespace confkit {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

[[noreturn]] void fail(std::size_t line, std::string message) {
  throw ParseError(Diagnostic{Diagnostic::Severity::Error, line, std::move(message)});
}

[[noreturn]] void fail_config(std::string message) {
  throw ParseError(Diagnostic{Diagnostic::Severity::Error, std::monostate{}, std::move(message)});
}

/// Splits "(a, b, c)" into its comma-separated fields.
std::vector<std::string_view> fields_of(std::string_view line, std::size_t line_no) {
  if (line.front() != '(' || line.back() != ')') {
    fail(line_no, "expected '(<ini-state>, <label>, <end-state>)'");
  }
  std::vector<std::string_view> fields;
  std::string_view inner = line.substr(1, line.size() - 2);
  while (true) {
    const auto comma = inner.find(',');
    fields.push_back(trim(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail(line_no, "malformed count '" + std::string(field) + "'");
  return value;
}

struct RawTransition {
  std::string source;
  std::string label;  // marker stripped
  char marker = 0;    // '?', '!' or 0
  std::string target;
  std::size_t line = 0;
};

struct LabelUse {
  bool as_input = false;
  bool as_output = false;
  bool unmarked = false;
  std::size_t first_line = 0;
};

void check_token(std::string_view token, std::size_t line_no, const char* what) {
  if (token.empty()) fail(line_no, std::string("empty ") + what);
  for (char c : token) {
    if (c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t') {
      fail(line_no, std::string("invalid character in ") + what + " '" + std::string(token) + "'");
    }
  }
}

}  // namespace

ParsedModel parse_aldebaran(std::string_view text, const LabelingConfig& labeling) {
  std::vector<Diagnostic> warnings;
  const bool iolts = labeling.model_kind == ModelKind::Iolts;

  std::optional<std::string> initial;
  std::size_t declared_transitions = 0;
  std::size_t declared_states = 0;
  std::size_t header_line = 0;
  std::vector<RawTransition> raw;

  std::istringstream in{std::string(text)};
  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string_view line = trim(buffer);
    if (line.empty() || line.front() == '#') continue;

    if (!initial) {
      if (line.substr(0, 3) != "des") fail(line_no, "expected header 'des (<initial-state>, <number-of-transitions>, <number-of-states>)'");
      const auto f = fields_of(trim(line.substr(3)), line_no);
      if (f.size() != 3) fail(line_no, "malformed header: expected 3 fields");
      check_token(unquote(f[0]), line_no, "initial state");
      initial = std::string(unquote(f[0]));
      declared_transitions = parse_count(f[1], line_no);
      declared_states = parse_count(f[2], line_no);
      header_line = line_no;
      continue;
    }

    const auto f = fields_of(line, line_no);
    if (f.size() != 3) {
      fail(line_no, "transition has " + std::to_string(f.size()) + " fields, expected 3");
    }
    RawTransition t;
    t.line = line_no;
    t.source = std::string(unquote(f[0]));
    t.target = std::string(unquote(f[2]));
    std::string_view label = unquote(f[1]);
    if (!label.empty() && (label.front() == '?' || label.front() == '!')) {
      t.marker = label.front();
      label.remove_prefix(1);
    }
    check_token(t.source, line_no, "state name");
    check_token(t.target, line_no, "state name");
    check_token(label, line_no, "label");
    t.label = std::string(label);
    raw.push_back(std::move(t));
  }
  if (!initial) fail(line_no == 0 ? 1 : line_no, "missing 'des' header");

  // State order: initial, then first appearance in the body.
  std::vector<std::string> states{*initial};
  std::unordered_set<std::string> seen{*initial};
  for (const auto& t : raw) {
    for (const auto* s : {&t.source, &t.target}) {
      if (seen.insert(*s).second) states.push_back(*s);
    }
  }

  auto count_mismatch = [&](std::string message) {
    Diagnostic d{labeling.strict ? Diagnostic::Severity::Error : Diagnostic::Severity::Warning,
                 header_line, std::move(message)};
    if (labeling.strict) throw ParseError(std::move(d));
    warnings.push_back(std::move(d));
  };
  if (declared_transitions != raw.size()) {
    count_mismatch("header declares " + std::to_string(declared_transitions) +
                   " transitions but the body has " + std::to_string(raw.size()));
  }
  if (declared_states != states.size()) {
    count_mismatch("header declares " + std::to_string(declared_states) +
                   " states but the transitions mention " + std::to_string(states.size()));
  }

  // Label classification.
  std::map<std::string, LabelUse> uses;
  for (const auto& t : raw) {
    auto& use = uses[t.label];
    if (use.first_line == 0) use.first_line = t.line;
    if (t.marker == '?') use.as_input = true;
    else if (t.marker == '!') use.as_output = true;
    else use.unmarked = true;
  }

  std::set<std::string> inputs;
  std::set<std::string> outputs;
  std::map<std::string, LabelKind> kinds;

  if (iolts && labeling.mode == LabelingConfig::Mode::Explicit) {
    for (const auto& name : labeling.inputs) {
      if (labeling.outputs.contains(name)) fail_config("label '" + name + "' declared as both input and output");
    }
    inputs = labeling.inputs;
    outputs = labeling.outputs;
    if (inputs.contains(std::string(kQuiescence))) fail_config("'delta' cannot be declared as an input");
  }

  for (const auto& [name, use] : uses) {
    const std::size_t line = use.first_line;
    if (use.as_input && use.as_output) fail(line, "label '" + name + "' is marked both as input and output");
    if (use.unmarked && (use.as_input || use.as_output)) {
      fail(line, "label '" + name + "' appears both with and without a marker");
    }
    const bool marked = use.as_input || use.as_output;

    if (labeling.internal_labels.contains(name)) {
      if (marked) fail(line, "internal label '" + name + "' cannot carry a marker");
      kinds[name] = LabelKind::Internal;
      continue;
    }

    if (!iolts) {
      if (name == kQuiescence) fail(line, "'delta' is reserved for quiescence in IOLTS models");
      inputs.insert(name);
      kinds[name] = LabelKind::Input;
      continue;
    }

    if (name == kQuiescence) {
      if (use.as_input) fail(line, "'delta' is an output and cannot be marked as input");
      outputs.insert(name);
      kinds[name] = LabelKind::Quiescence;
      continue;
    }

    if (labeling.mode == LabelingConfig::Mode::Markers) {
      if (!marked) fail(line, "label '" + name + "' has no '?' or '!' marker");
      (use.as_input ? inputs : outputs).insert(name);
      kinds[name] = use.as_input ? LabelKind::Input : LabelKind::Output;
      continue;
    }

    const bool in = inputs.contains(name);
    const bool out = outputs.contains(name);
    if (!in && !out) fail(line, "label '" + name + "' is in neither the input nor the output set");
    if ((use.as_input && !in) || (use.as_output && !out)) {
      fail(line, "marker on label '" + name + "' contradicts the declared label sets");
    }
    kinds[name] = in ? LabelKind::Input : LabelKind::Output;
  }

  std::vector<Transition> transitions;
  transitions.reserve(raw.size());
  for (auto& t : raw) {
    transitions.push_back(
        Transition{std::move(t.source), Label{t.label, kinds.at(t.label)}, std::move(t.target)});
  }

  try {
    return ParsedModel{TransitionSystem(labeling.model_kind, std::move(states), *initial,
                                        std::move(inputs), std::move(outputs),
                                        std::move(transitions)),
                       std::move(warnings)};
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(header_line, e.what());
  }
}

std::string serialize_aldebaran(const TransitionSystem& ts, bool markers) {
  std::ostringstream out;
  out << "des (" << ts.initial() << "," << ts.transitions().size() << "," << ts.states().size()
      << ")\n";
  for (const auto& t : ts.transitions()) {
    out << '(' << t.source << ',';
    if (markers && ts.kind() == ModelKind::Iolts) {
      if (t.label.kind == LabelKind::Input) out << '?';
      if (t.label.kind == LabelKind::Output || t.label.kind == LabelKind::Quiescence) out << '!';
    }
    out << t.label.name << ',' << t.target << ")\n";
  }
  return out.str();
}

}  // namespace confkit
