#pragma once

// Direct simulation of a transition system over sets of states.

#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "confkit/models.hpp"

namespace confkit::detail {

class Simulator {
 public:
  using StateSet = std::vector<std::size_t>;  // sorted

  /// With `derive_quiescence`, "delta" is an extra output available on every
  /// quiescent state, looping on it.
  Simulator(const TransitionSystem& ts, bool derive_quiescence);

  StateSet initial() const;
  StateSet closure(StateSet states) const;
  StateSet after(const StateSet& states, const std::string& label) const;
  /// Outputs enabled in the set, canonical order.
  std::vector<std::string> out(const StateSet& states) const;
  bool quiescent(std::size_t state) const { return quiescent_[state]; }

  /// Visible transitions from `states` on `label` whose target lies in `next`.
  std::vector<Transition> moves(const StateSet& states, const std::string& label,
                                const StateSet& next) const;

  /// A single name, or "{a,b}" for several states; "{}" when empty.
  std::string render(const StateSet& states) const;

  const TransitionSystem& system() const { return ts_; }

 private:
  const TransitionSystem& ts_;
  bool derive_quiescence_;
  std::vector<std::vector<std::pair<std::string, std::size_t>>> visible_;
  std::vector<std::vector<std::size_t>> internal_;
  std::vector<bool> quiescent_;
};

}  // namespace confkit::detail
