#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "confkit/automata.hpp"
#include "confkit/models.hpp"
#include "confkit/regex.hpp"

namespace confkit {

enum class Relation { Ioco, Language };

std::string_view to_string(Relation relation);

/// One binary product built along a pipeline, with operand and result sizes.
struct ProductRecord {
  std::string operation;  // "intersection" or "union"
  std::string left;
  std::string right;
  std::size_t left_states = 0;
  std::size_t right_states = 0;
  std::size_t result_states = 0;

  /// result <= (left + 1) * (right + 1): each operand gains at most one dead
  /// state when completed.
  bool within_bound() const noexcept {
    return result_states <= (left_states + 1) * (right_states + 1);
  }
};

struct AutomatonSize {
  std::string name;
  std::size_t states = 0;
  std::size_t transitions = 0;
};

/// The test-suite automaton T together with what it was built from.
struct FaultModel {
  Fsa automaton;
  Relation relation;
  std::string desirable;    // description of D
  std::string undesirable;  // description of F
  /// The specification as used: quiescence-augmented in ioco mode.
  TransitionSystem spec;
  std::vector<AutomatonSize> automata;
  std::vector<ProductRecord> products;
};

/// Automaton for otr(ts) L_U: the states of ts (internal moves as epsilon),
/// plus a fresh final sink "f" reached from every state by every output, then
/// determinized.  Throws Error for an LTS.
Fsa model_d(const TransitionSystem& ts);

/// T = complement(det(induced(spec_delta))) x model_d(spec_delta).
FaultModel fault_model_ioco(const TransitionSystem& spec);

/// What a blank undesirable-behavior field stands for.
enum class BlankUndesirable { Empty, Kleene };

struct LanguageOptions {
  /// Blank means the Kleene closure of the spec alphabet.
  std::optional<Regex> desirable;
  std::optional<Regex> undesirable;
  BlankUndesirable blank_undesirable = BlankUndesirable::Empty;
};

/// T = (D x complement(S)) + (F x S), where a side whose language is empty is
/// left out of the union.  D and F are compiled over the spec alphabet.
FaultModel fault_model_language(const TransitionSystem& spec, const LanguageOptions& options);

/// Same, with D and F given as automata over (a subset of) the spec alphabet.
FaultModel fault_model_language(const TransitionSystem& spec, const Fsa& desirable,
                                const Fsa& undesirable, std::string desirable_name = "D",
                                std::string undesirable_name = "F");

struct TestCase {
  Word fault_word;
  /// ioco: fault word minus its final output; language: the fault word.
  Word stimulus_prefix;
  /// ioco only: out(spec after prefix), canonical order.
  std::vector<std::string> expected_outputs;
  /// ioco only: the final output of the fault word.
  std::optional<std::string> observed_output;
  /// States of the spec along the prefix; in language mode it stops where the
  /// word leaves otr(spec).  Sets of states render as "{a,b}".
  std::vector<std::string> spec_path;
  std::vector<std::string> iut_path;
};

struct TestSuite {
  std::vector<TestCase> cases;
  std::set<Transition> covered_spec_transitions;
  std::vector<std::string> warnings;
};

/// Enumeration limit: nullopt = the number of states of the product.
using Bound = std::optional<std::size_t>;

/// Picks test cases from the accepted words of b = T x I.
///
/// Candidates are the accepted paths of b that revisit no position, except for
/// at most one step that stays put (never a quiescence step), up to `bound`
/// symbols.  A position is the product state in language mode and the pair
/// (spec states, implementation states) in ioco mode, where the fault model
/// keeps otherwise identical copies of a state that differ only in acceptance.
/// Words are grouped by the fault they witness: (spec states after the prefix,
/// observed output) in ioco mode, the accepting product state in language
/// mode.  Within a group, words are visited shortest first and kept unless the
/// product edges they exercise past the point of failure are a subset of a
/// word already kept.
///
/// `spec` and `iut` are the models whose labels b reads (quiescence-augmented
/// in ioco mode).
TestSuite extract_test_suite(const Fsa& b, const TransitionSystem& spec,
                             const TransitionSystem& iut, Relation relation, Bound bound);

struct VerifyOptions {
  Bound bound;
};

struct Verdict {
  bool conforms = true;
  Relation relation = Relation::Ioco;
  std::vector<TestCase> test_cases;
  std::set<Transition> covered_spec_transitions;
  std::vector<AutomatonSize> automata;
  std::vector<ProductRecord> products;
  double elapsed_ms = 0.0;
  std::vector<std::string> warnings;
};

/// Both models must be IOLTSs with the same inputs and outputs.
Verdict verify_ioco(const TransitionSystem& spec, const TransitionSystem& iut,
                    const VerifyOptions& options = {});

/// Both models must have the same visible labels.
Verdict verify_language(const TransitionSystem& spec, const TransitionSystem& iut,
                        const LanguageOptions& language, const VerifyOptions& options = {});

/// With a prebuilt fault model of `spec`.
Verdict verify_language(const TransitionSystem& iut, const FaultModel& fault_model,
                        const VerifyOptions& options = {});

// Brute-force oracles.  They walk the transition systems directly and share no
// code with the automaton pipeline.

/// A word language explored one symbol at a time.  States are interned ids.
class WordLanguage {
 public:
  using State = std::size_t;
  static constexpr State kDead = std::numeric_limits<State>::max();

  virtual ~WordLanguage() = default;
  virtual State start() = 0;
  virtual State step(State state, const std::string& symbol) = 0;
  virtual bool accepting(State state) = 0;
};

std::unique_ptr<WordLanguage> empty_language();
/// Membership by regex derivatives.
std::unique_ptr<WordLanguage> regex_language(Regex regex);
/// otr(ts) L_U, where L_U is ts.outputs().
std::unique_ptr<WordLanguage> trace_output_language(const TransitionSystem& ts);

/// Quiescence is derived on the fly; neither model may contain "delta".
/// Checks out(iut after s) <= out(spec after s) for every s in otr(spec_delta)
/// with |s| <= k.
bool oracle_ioco(const TransitionSystem& spec, const TransitionSystem& iut, std::size_t k);

/// False iff some s in otr(iut), |s| <= k, is in D \ otr(spec) or in
/// F & otr(spec).
bool oracle_language(const TransitionSystem& spec, const TransitionSystem& iut,
                     WordLanguage& desirable, WordLanguage& undesirable, std::size_t k);

/// (n_S+1)(n_I+1)(n_D+1)(n_F+1), capped at `cap`.
std::size_t oracle_bound(std::size_t spec_states, std::size_t iut_states, std::size_t d_states,
                         std::size_t f_states, std::size_t cap = 12);

/// s in otr(ts).
bool oracle_is_trace(const TransitionSystem& ts, const Word& word);

/// out(ts after prefix), quiescence derived on the fly for an IOLTS without
/// "delta".  Empty when prefix is not a trace.
std::set<std::string> oracle_out_after(const TransitionSystem& ts, const Word& prefix);

}  // namespace confkit
