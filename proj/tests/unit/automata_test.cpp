#include <gtest/gtest.h>

#include "confkit/automata.hpp"
#include "confkit/conformance.hpp"
#include "confkit/regex.hpp"
#include "generators.hpp"
#include "isomorphism.hpp"
#include "scenario_models.hpp"

namespace confkit {
namespace {

using testing::all_words;

Word w(std::initializer_list<const char*> symbols) { return {symbols.begin(), symbols.end()}; }

bool same_language(const Fsa& a, const Fsa& b, std::size_t max_len) {
  for (const auto& word : all_words(a.alphabet(), max_len)) {
    if (accepts(a, word) != accepts(b, word)) return false;
  }
  return true;
}

Fsa spec_dfa() { return determinize(induced_fsa(testing::spec_s())); }

std::optional<Fsa::State> find_tag(const Fsa& a, std::string_view display) {
  for (Fsa::State s = 0; s < a.num_states(); ++s) {
    if (a.tag(s).display == display) return s;
  }
  return std::nullopt;
}

TEST(InducedFsa, SpecShape) {
  const auto a = induced_fsa(testing::spec_s());
  EXPECT_EQ(a.num_states(), 4u);
  EXPECT_EQ(a.num_transitions(), 9u);
  EXPECT_FALSE(a.has_epsilon());
  for (Fsa::State s = 0; s < a.num_states(); ++s) EXPECT_TRUE(a.is_final(s));
  EXPECT_EQ(a.alphabet(), (std::vector<std::string>{"a", "b", "x"}));
}

TEST(InducedFsa, LanguageIsObservableTraces) {
  const auto s = testing::spec_s();
  const auto a = induced_fsa(s);
  EXPECT_TRUE(accepts(a, w({"a", "x"})));
  EXPECT_FALSE(accepts(a, w({"x", "a"})));
  for (const auto& word : all_words(a.alphabet(), 6)) {
    EXPECT_EQ(accepts(a, word), oracle_is_trace(s, word));
  }
}

TEST(InducedFsa, InternalMovesBecomeEpsilon) {
  const auto m = testing::parse_markers("des (p,2,3)\n(p,tau,q)\n(q,?a,r)\n");
  const auto a = induced_fsa(m);
  EXPECT_TRUE(a.has_epsilon());
  ASSERT_EQ(a.edges(0).size(), 1u);
  EXPECT_EQ(a.edges(0).front().symbol, Fsa::kEpsilon);
  EXPECT_TRUE(accepts(a, w({"a"})));
}

TEST(Determinize, FixpointOnDeterministicInput) {
  const auto a = induced_fsa(testing::spec_s());
  ASSERT_TRUE(a.is_deterministic());
  const auto d = determinize(a);
  EXPECT_TRUE(testing::isomorphic(a, d));
  for (Fsa::State s = 0; s < d.num_states(); ++s) EXPECT_EQ(d.tag(s).provenance.size(), 1u);
}

TEST(Determinize, PlusLanguage) {
  Fsa n({"a"});
  n.add_state(StateTag::named("0"));
  n.add_state(StateTag::named("1"), true);
  n.add_transition(0, 0, 0);
  n.add_transition(0, 0, 1);
  const auto d = determinize(n);
  EXPECT_TRUE(d.is_deterministic());
  for (std::size_t len = 0; len <= 4; ++len) {
    const Word word(len, "a");
    EXPECT_EQ(accepts(d, word), len >= 1);
    EXPECT_EQ(accepts(d, word), accepts(n, word));
  }
}

TEST(Determinize, InternalMovesRemoved) {
  const auto m = testing::parse_markers(
      "des (p,5,4)\n(p,tau,q)\n(p,?a,r)\n(q,?a,s)\n(s,!x,p)\n(r,tau,s)\n");
  const auto a = induced_fsa(m);
  const auto d = determinize(a);
  EXPECT_FALSE(d.has_epsilon());
  EXPECT_TRUE(d.is_deterministic());
  EXPECT_TRUE(same_language(a, d, 6));
}

TEST(Complete, SpecGainsDeadState) {
  const auto c = complete(spec_dfa());
  ASSERT_EQ(c.num_states(), 5u);
  const auto dead = find_tag(c, "c");
  ASSERT_TRUE(dead);
  EXPECT_FALSE(c.is_final(*dead));
  const auto sym = [&](const char* l) { return *c.symbol_of(l); };
  const auto state = [&](const char* n) { return *find_tag(c, n); };
  EXPECT_EQ(c.successor(state("s0"), sym("x")), dead);
  EXPECT_EQ(c.successor(state("s2"), sym("a")), dead);
  EXPECT_EQ(c.successor(state("s3"), sym("x")), dead);
  for (const char* l : {"a", "b", "x"}) EXPECT_EQ(c.successor(*dead, sym(l)), dead);
  EXPECT_EQ(c.num_transitions(), 9u + 3u + 3u);
  EXPECT_TRUE(c.is_complete());
}

TEST(Complete, AlreadyCompleteIsUnchanged) {
  const auto c = complete(spec_dfa());
  const auto again = complete(c);
  EXPECT_EQ(again.num_states(), c.num_states());
  EXPECT_EQ(again.num_transitions(), c.num_transitions());
}

TEST(Complete, SingleStateNoMoves) {
  Fsa a({"a"});
  a.set_initial(a.add_state(StateTag::named("0"), true));
  const auto c = complete(a);
  EXPECT_EQ(c.num_states(), 2u);
  EXPECT_EQ(c.num_transitions(), 2u);
}

TEST(Complete, RejectsNondeterministicInput) {
  Fsa n({"a"});
  n.add_state(StateTag::named("0"));
  n.add_state(StateTag::named("1"));
  n.add_transition(0, 0, 0);
  n.add_transition(0, 0, 1);
  EXPECT_THROW(complete(n), Error);
}

TEST(Complement, SpecMembership) {
  const auto c = complement(induced_fsa(testing::spec_s()));
  EXPECT_TRUE(accepts(c, w({"x"})));
  EXPECT_FALSE(accepts(c, w({"a", "x"})));
  EXPECT_TRUE(accepts(c, w({"a", "b", "a"})));
  EXPECT_FALSE(accepts(c, {}));
}

TEST(Complement, MatchesDeadStateGraph) {
  // Dead state c: x from s0 and s3, a from s2, every symbol loops on c; c is
  // the only final state.
  testing::Graph expected;
  expected.size = 5;
  expected.root = 0;
  expected.marked = {false, false, false, false, true};
  const std::size_t s0 = 0, s1 = 1, s2 = 2, s3 = 3, c = 4;
  expected.edges = {{s0, "a", s1}, {s0, "b", s3}, {s1, "b", s2}, {s1, "x", s2}, {s1, "a", s3},
                    {s2, "b", s2}, {s2, "x", s3}, {s3, "b", s0}, {s3, "a", s3}, {s0, "x", c},
                    {s2, "a", c},  {s3, "x", c},  {c, "a", c},   {c, "b", c},   {c, "x", c}};
  EXPECT_TRUE(testing::isomorphic(testing::graph_of(complement(spec_dfa())), expected));
}

TEST(Complement, Involution) {
  testing::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_fsa(rng, 4, {"a", "b"});
    EXPECT_TRUE(same_language(a, complement(complement(a)), 5));
  }
}

TEST(Intersection, RegexAndSpec) {
  const auto s = testing::spec_s();
  const auto d = regex_to_fsa(parse_regex("(a|b)*ax", s.alphabet()), s.alphabet());
  const auto p = intersection(d, induced_fsa(s));
  EXPECT_TRUE(accepts(p, w({"a", "x"})));
  EXPECT_FALSE(accepts(p, w({"a", "b", "a", "x"})));
}

TEST(Intersection, WithOwnComplementIsEmpty) {
  testing::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_fsa(rng, 5, {"a", "b", "c"});
    EXPECT_TRUE(is_empty_language(intersection(a, complement(a))));
  }
}

TEST(Intersection, ScenarioTwoSuiteAutomaton) {
  const auto s = testing::spec_s();
  LanguageOptions opts;
  opts.desirable = parse_regex("(a|b)*ax", s.alphabet());
  const auto fm = fault_model_language(s, opts);
  const auto b = intersection(fm.automaton, determinize(induced_fsa(testing::impl_q())));
  EXPECT_EQ(b.num_states(), 12u);
  const auto final = find_tag(b, "cd2q2");
  ASSERT_TRUE(final);
  EXPECT_TRUE(b.is_final(*final));
  EXPECT_FALSE(is_empty_language(b));
}

TEST(Intersection, DifferentAlphabets) {
  Fsa a({"a"});
  a.set_initial(a.add_state(StateTag::named("p"), true));
  a.add_transition(0, 0, 0);
  Fsa b({"b", "a"});
  b.set_initial(b.add_state(StateTag::named("q"), true));
  b.add_transition(0, "a", 0);
  b.add_transition(0, "b", 0);
  const auto p = intersection(a, b);
  EXPECT_EQ(p.alphabet(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(accepts(p, w({"a", "a"})));
  EXPECT_FALSE(accepts(p, w({"b"})));
  const auto u = union_of(a, b);
  EXPECT_TRUE(accepts(u, w({"b", "a"})));
}

TEST(Union, WithEmptyLanguage) {
  testing::Rng rng(5);
  Fsa empty({"a", "b"});
  empty.set_initial(empty.add_state(StateTag::named("e")));
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_fsa(rng, 4, {"a", "b"});
    EXPECT_TRUE(same_language(a, union_of(a, empty), 5));
  }
}

TEST(Union, TwoSingletons) {
  const std::vector<std::string> ab{"a", "b"};
  const auto u = union_of(regex_to_fsa(Regex::symbol("a"), ab), regex_to_fsa(Regex::symbol("b"), ab));
  EXPECT_EQ(enumerate_accepted(u, 1), (std::vector<Word>{w({"a"}), w({"b"})}));
  EXPECT_EQ(enumerate_accepted(u, 3).size(), 2u);
}

TEST(Union, ScenarioTwoWithEmptyUndesirableSide) {
  const auto s = testing::spec_s();
  const auto alphabet = s.alphabet();
  const auto a_s = determinize(induced_fsa(s));
  const auto fail_d = intersection(complement(a_s), regex_to_fsa(parse_regex("(a|b)*ax", alphabet), alphabet));
  const auto fail_f = intersection(a_s, regex_to_fsa(Regex::empty(), alphabet));
  EXPECT_TRUE(is_empty_language(fail_f));
  EXPECT_TRUE(same_language(union_of(fail_d, fail_f), fail_d, 8));
}

TEST(EmptyLanguage, Cases) {
  Fsa rejecting({"a"});
  rejecting.set_initial(rejecting.add_state(StateTag::named("0")));
  rejecting.add_transition(0, 0, 0);
  EXPECT_TRUE(is_empty_language(rejecting));
  Fsa a({"a"});
  a.set_initial(a.add_state(StateTag::named("0"), true));
  EXPECT_FALSE(is_empty_language(a));
  Fsa unreachable({"a"});
  unreachable.set_initial(unreachable.add_state(StateTag::named("0")));
  unreachable.add_state(StateTag::named("1"), true);
  EXPECT_TRUE(is_empty_language(unreachable));
}

TEST(EmptyLanguage, ScenarioTwoIocoSuiteHasNoFinalState) {
  const auto fm = fault_model_ioco(testing::spec_s());
  const auto b = intersection(fm.automaton, determinize(induced_fsa(add_quiescence(testing::impl_q()))));
  EXPECT_TRUE(is_empty_language(b));
  for (Fsa::State s = 0; s < b.num_states(); ++s) EXPECT_FALSE(b.is_final(s));
}

TEST(Accepts, Basics) {
  const auto a = induced_fsa(testing::spec_s());
  EXPECT_TRUE(accepts(a, w({"a", "b"})));
  EXPECT_TRUE(accepts(a, {}));
  EXPECT_THROW(accepts(a, w({"zz"})), Error);
}

TEST(EnumerateAccepted, ShortestFirstThenLexicographic) {
  const std::vector<std::string> abx{"a", "b", "x"};
  const auto d = regex_to_fsa(parse_regex("(a|b)*ax", abx), abx);
  EXPECT_EQ(enumerate_accepted(d, 2), std::vector<Word>{w({"a", "x"})});
  EXPECT_EQ(enumerate_accepted(d, 3),
            (std::vector<Word>{w({"a", "x"}), w({"a", "a", "x"}), w({"b", "a", "x"})}));
  EXPECT_TRUE(enumerate_accepted(regex_to_fsa(Regex::empty(), abx), 5).empty());
}

TEST(EnumerateAccepted, ScenarioTwoSuiteAutomaton) {
  const auto s = testing::spec_s();
  LanguageOptions opts;
  opts.desirable = parse_regex("(a|b)*ax", s.alphabet());
  const auto b = intersection(fault_model_language(s, opts).automaton,
                              determinize(induced_fsa(testing::impl_q())));
  // Nothing up to length 5; at length 7 a third word appears besides the two
  // the selected suite reports.
  EXPECT_TRUE(enumerate_accepted(b, 5).empty());
  EXPECT_EQ(enumerate_accepted(b, 7),
            (std::vector<Word>{w({"a", "b", "a", "b", "a", "x"}), w({"a", "b", "a", "a", "b", "a", "x"}),
                               w({"a", "b", "b", "a", "b", "a", "x"})}));
}

TEST(RenameStates, BreadthFirstNames) {
  const std::vector<std::string> abx{"a", "b", "x"};
  const auto d = rename_states(determinize(regex_to_fsa(parse_regex("(a|b)*ax", abx), abx)), "d");
  ASSERT_EQ(d.num_states(), 3u);
  EXPECT_EQ(d.tag(d.initial()).display, "d0");
  EXPECT_EQ(d.tag(*d.successor(d.initial(), 0)).display, "d1");
  EXPECT_TRUE(d.is_final(*find_tag(d, "d2")));
}

TEST(FsaDot, FinalStatesDoubleCircled) {
  const auto dot = to_dot(complement(spec_dfa()));
  EXPECT_NE(dot.find("label=\"c\", shape=doublecircle"), std::string::npos);
  EXPECT_NE(dot.find("label=\"s0\", shape=circle"), std::string::npos);
}

TEST(Fsa, RejectsBadInput) {
  EXPECT_THROW(Fsa({"a", "a"}), Error);
  EXPECT_THROW(Fsa({""}), Error);
  Fsa a({"a"});
  a.add_state(StateTag::named("0"));
  EXPECT_THROW(a.add_transition(0, 0, 5), Error);
  EXPECT_THROW(a.add_transition(0, "b", 0), Error);
  EXPECT_THROW(a.set_initial(3), Error);
}

}  // namespace
}  // namespace confkit
