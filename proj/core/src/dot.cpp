#include <sstream>

#include "confkit/dot.hpp"
#include "confkit/models.hpp"

namespace confkit {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_dot(const TransitionSystem& ts, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (const auto& s : ts.states()) {
    out << "  " << dot_quote(s) << " [shape=circle];\n";
  }
  out << "  __start -> " << dot_quote(ts.initial()) << ";\n";
  for (const auto& t : ts.transitions()) {
    out << "  " << dot_quote(t.source) << " -> " << dot_quote(t.target)
        << " [label=" << dot_quote(t.label.name);
    if (t.label.kind == LabelKind::Quiescence) out << ", style=dashed";
    if (t.label.kind == LabelKind::Internal) out << ", style=dotted";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace confkit
