#include <algorithm>

#include "confkit/regex.hpp"

namespace confkit {

namespace {

struct Fragment {
  Fsa::State start;
  Fsa::State end;
};

class Compiler {
 public:
  explicit Compiler(const std::vector<std::string>& alphabet) : fsa_(alphabet) {}

  Fsa finish(const Regex& regex) {
    const auto f = build(regex);
    fsa_.set_initial(f.start);
    fsa_.set_final(f.end, true);
    return std::move(fsa_);
  }

 private:
  Fsa::State fresh() {
    return fsa_.add_state(StateTag::named("r" + std::to_string(fsa_.num_states())));
  }

  Fragment build(const Regex& r) {
    switch (r.kind()) {
      case Regex::Kind::Empty: {
        const auto s = fresh();
        return {s, fresh()};
      }
      case Regex::Kind::Epsilon: {
        const auto s = fresh();
        const auto e = fresh();
        fsa_.add_transition(s, Fsa::kEpsilon, e);
        return {s, e};
      }
      case Regex::Kind::Symbol: {
        const auto symbol = fsa_.symbol_of(r.name());
        if (!symbol) throw RegexError("unknown symbol " + r.name(), 0);
        const auto s = fresh();
        const auto e = fresh();
        fsa_.add_transition(s, *symbol, e);
        return {s, e};
      }
      case Regex::Kind::Concat: {
        auto first = build(r.children().front());
        auto end = first.end;
        for (std::size_t i = 1; i < r.children().size(); ++i) {
          const auto next = build(r.children()[i]);
          fsa_.add_transition(end, Fsa::kEpsilon, next.start);
          end = next.end;
        }
        return {first.start, end};
      }
      case Regex::Kind::Alt: {
        const auto s = fresh();
        const auto e = fresh();
        for (const auto& child : r.children()) {
          const auto f = build(child);
          fsa_.add_transition(s, Fsa::kEpsilon, f.start);
          fsa_.add_transition(f.end, Fsa::kEpsilon, e);
        }
        return {s, e};
      }
      case Regex::Kind::Star: {
        // One hub state is both entry and exit; the body loops back to it.
        const auto hub = fresh();
        const auto f = build(r.children().front());
        fsa_.add_transition(hub, Fsa::kEpsilon, f.start);
        fsa_.add_transition(f.end, Fsa::kEpsilon, hub);
        return {hub, hub};
      }
    }
    throw Error("unreachable regex kind");
  }

  Fsa fsa_;
};

}  // namespace

Fsa regex_to_fsa(const Regex& regex, const std::vector<std::string>& alphabet) {
  return Compiler(alphabet).finish(regex);
}

}  // namespace confkit
