#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using confkit::cli::RunConfig;

struct Flags {
  std::string model_type = "iolts";
  std::string labels = "markers";
  std::string bound = "auto";
  std::string format = "text";
  std::string blank_undesirable = "empty";
  std::string model;  // positional file for render/info
};

void add_model_flags(CLI::App& cmd, RunConfig& cfg, Flags& flags) {
  cmd.add_option("--model-type", flags.model_type, "lts or iolts")
      ->check(CLI::IsMember({"lts", "iolts"}))
      ->capture_default_str();
  cmd.add_option("--labels", flags.labels, "How IOLTS labels are classified: markers or explicit")
      ->check(CLI::IsMember({"markers", "explicit"}))
      ->capture_default_str();
  cmd.add_option("--inputs", cfg.inputs, "Input labels (explicit mode)")->delimiter(',');
  cmd.add_option("--outputs", cfg.outputs, "Output labels (explicit mode)")->delimiter(',');
  cmd.add_flag("--strict", cfg.strict, "Treat header/body count mismatches as errors");
}

void add_language_flags(CLI::App& cmd, RunConfig& cfg, Flags& flags) {
  cmd.add_option("--desirable", cfg.desirable,
                 "Regex for D; blank means the Kleene closure of the alphabet");
  cmd.add_option("--undesirable", cfg.undesirable, "Regex for F; blank means the empty language");
  cmd.add_option("--blank-undesirable", flags.blank_undesirable,
                 "Meaning of a blank F: empty or kleene")
      ->check(CLI::IsMember({"empty", "kleene"}))
      ->capture_default_str();
}

void add_report_flags(CLI::App& cmd, RunConfig& cfg, Flags& flags) {
  cmd.add_option("--bound", flags.bound, "Longest fault word enumerated: a count or auto")
      ->capture_default_str();
  cmd.add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd.add_flag("--timing", cfg.timing, "Include elapsed time in the report");
}

void add_file_argument(CLI::App& cmd, RunConfig& cfg, Flags& flags) {
  cmd.add_option("model", flags.model, "Model file (.aut)");
  cmd.add_option("--spec", cfg.spec_path, "Model file (.aut), alternative to the positional");
}

void resolve(RunConfig& cfg, const Flags& flags) {
  using confkit::LabelingConfig;
  cfg.model_kind = flags.model_type == "lts" ? confkit::ModelKind::Lts : confkit::ModelKind::Iolts;
  cfg.label_mode =
      flags.labels == "explicit" ? LabelingConfig::Mode::Explicit : LabelingConfig::Mode::Markers;
  cfg.format = flags.format == "json" ? confkit::cli::Format::Json : confkit::cli::Format::Text;
  cfg.blank_undesirable = flags.blank_undesirable == "kleene" ? confkit::BlankUndesirable::Kleene
                                                              : confkit::BlankUndesirable::Empty;
  if (flags.bound != "auto") {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(flags.bound, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != flags.bound.size() || flags.bound.front() == '-') {
      throw CLI::ValidationError("--bound", "expected a count or 'auto'");
    }
    cfg.bound = static_cast<std::size_t>(value);
  }
  if (!flags.model.empty()) cfg.spec_path = flags.model;
  if (const char* env = std::getenv("CONFKIT_INTERNAL_LABELS")) {
    cfg.internal_labels = confkit::cli::parse_internal_labels(env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformance checking for labeled transition systems"};
  app.require_subcommand(1);

  RunConfig cfg;
  Flags flags;

  auto* ioco = app.add_subcommand("check-ioco", "Check spec vs. implementation under ioco");
  auto* lang = app.add_subcommand("check-lang", "Check language-based conformance conf_{D,F}");
  for (auto* cmd : {ioco, lang}) {
    cmd->add_option("--spec", cfg.spec_path, "Specification model (.aut)")->required();
    cmd->add_option("--iut", cfg.iut_path, "Implementation model (.aut)")->required();
    add_model_flags(*cmd, cfg, flags);
    add_report_flags(*cmd, cfg, flags);
  }
  add_language_flags(*lang, cfg, flags);

  auto* render = app.add_subcommand("render", "Print a model or derived automaton as DOT");
  add_file_argument(*render, cfg, flags);
  add_model_flags(*render, cfg, flags);
  add_language_flags(*render, cfg, flags);
  render->add_option("--what", cfg.what, "model, induced, fault-ioco or fault-lang")
      ->check(CLI::IsMember({"model", "induced", "fault-ioco", "fault-lang"}))
      ->capture_default_str();
  render->add_option("--out", cfg.out_path, "Write the DOT text to this file");

  auto* info = app.add_subcommand("info", "Summarize a model");
  add_file_argument(*info, cfg, flags);
  add_model_flags(*info, cfg, flags);
  info->add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    resolve(cfg, flags);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return confkit::cli::kUsageError;
  }

  if (ioco->parsed()) return confkit::cli::cmd_check_ioco(cfg, std::cout, std::cerr);
  if (lang->parsed()) return confkit::cli::cmd_check_lang(cfg, std::cout, std::cerr);
  if (render->parsed()) return confkit::cli::cmd_render(cfg, std::cout, std::cerr);
  return confkit::cli::cmd_info(cfg, std::cout, std::cerr);
}
