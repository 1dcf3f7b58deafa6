#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "confkit/error.hpp"

namespace confkit {

/// Reserved name of the quiescence output.
inline constexpr std::string_view kQuiescence = "delta";

/// A sequence of visible label names.
using Word = std::vector<std::string>;

enum class ModelKind { Lts, Iolts };

enum class LabelKind { Input, Output, Internal, Quiescence };

struct Label {
  std::string name;
  LabelKind kind = LabelKind::Input;

  bool visible() const noexcept { return kind != LabelKind::Internal; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct Transition {
  std::string source;
  Label label;
  std::string target;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// An LTS or IOLTS.
///
/// States keep their declaration order, the initial state first.  Transitions
/// are deduplicated and sorted by (source, label, target).  An LTS files every
/// visible label under inputs(); consumers treat that set as the undivided
/// alphabet and never look at the partition.  The quiescence label, when
/// present, is always an output.
class TransitionSystem {
 public:
  /// Validates and normalizes; throws confkit::Error on a broken invariant.
  TransitionSystem(ModelKind kind, std::vector<std::string> states, std::string initial,
                   std::set<std::string> inputs, std::set<std::string> outputs,
                   std::vector<Transition> transitions);

  ModelKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& initial() const noexcept { return initial_; }
  const std::set<std::string>& inputs() const noexcept { return inputs_; }
  const std::set<std::string>& outputs() const noexcept { return outputs_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  /// Visible labels in canonical order: inputs sorted, outputs sorted, then
  /// the quiescence label last.
  std::vector<std::string> alphabet() const;

  bool has_state(std::string_view name) const;
  std::optional<std::size_t> state_index(std::string_view name) const;
  bool has_label(std::string_view name) const;
  bool has_internal_transitions() const;

  /// No internal transitions and at most one target per (state, label).
  bool is_deterministic() const;

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;

 private:
  ModelKind kind_;
  std::vector<std::string> states_;
  std::string initial_;
  std::set<std::string> inputs_;
  std::set<std::string> outputs_;
  std::vector<Transition> transitions_;
};

/// How labels in an Aldebaran file are classified.
struct LabelingConfig {
  enum class Mode { Markers, Explicit };

  ModelKind model_kind = ModelKind::Iolts;
  Mode mode = Mode::Markers;
  /// Explicit mode only.
  std::set<std::string> inputs;
  std::set<std::string> outputs;
  std::set<std::string> internal_labels = default_internal_labels();
  /// Promote header/body count mismatches from warnings to errors.
  bool strict = false;

  static std::set<std::string> default_internal_labels() { return {"tau", "i"}; }
};

struct ParsedModel {
  TransitionSystem system;
  std::vector<Diagnostic> warnings;
};

/// Reads the Aldebaran `.aut` format.  Lines starting with '#' are comments.
/// Throws ParseError on any error diagnostic.
ParsedModel parse_aldebaran(std::string_view text, const LabelingConfig& labeling);

/// Header line then one line per transition in canonical order.  With markers,
/// inputs are written as "?a" and outputs as "!x".
std::string serialize_aldebaran(const TransitionSystem& ts, bool markers);

/// States with no outgoing output (quiescence included) and no internal move.
/// Throws Error for an LTS.
std::set<std::string> quiescent_states(const TransitionSystem& ts);

/// Copy with a "delta" self-loop on each quiescent state and "delta" added to
/// the outputs.  Throws Error for an LTS or when "delta" is already present.
TransitionSystem add_quiescence(const TransitionSystem& ts);

/// Graphviz rendering; quiescence edges are dashed.
std::string to_dot(const TransitionSystem& ts, std::string_view graph_name = "model");

}  // namespace confkit
