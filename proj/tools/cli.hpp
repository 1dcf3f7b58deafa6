#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "confkit/conformance.hpp"
#include "confkit/models.hpp"

namespace confkit::cli {

enum class Format { Text, Json };

enum ExitCode : int { kConforms = 0, kDoesNotConform = 1, kUsageError = 2 };

struct RunConfig {
  std::string spec_path;
  std::string iut_path;
  ModelKind model_kind = ModelKind::Iolts;
  LabelingConfig::Mode label_mode = LabelingConfig::Mode::Markers;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  /// Absent or blank means the default language.
  std::optional<std::string> desirable;
  std::optional<std::string> undesirable;
  BlankUndesirable blank_undesirable = BlankUndesirable::Empty;
  Bound bound;
  Format format = Format::Text;
  bool strict = false;
  bool timing = false;
  /// DOT destination for render; stdout when absent.
  std::optional<std::string> out_path;
  /// render: model | induced | fault-ioco | fault-lang
  std::string what = "model";
  std::set<std::string> internal_labels = LabelingConfig::default_internal_labels();
};

/// Comma-separated override of the internal label set, as read from the
/// CONFKIT_INTERNAL_LABELS environment variable.
std::set<std::string> parse_internal_labels(const std::string& value);

int cmd_check_ioco(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_lang(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Space-separated labels, "ε" for the empty word.
std::string render_word(const Word& word);

}  // namespace confkit::cli
