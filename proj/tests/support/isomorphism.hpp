#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "confkit/automata.hpp"
#include "confkit/models.hpp"

namespace confkit::testing {

/// Labeled graph with a root; names are ignored when comparing.
struct Graph {
  std::size_t size = 0;
  std::size_t root = 0;
  std::vector<bool> marked;  // final states, or all false
  std::set<std::tuple<std::size_t, std::string, std::size_t>> edges;
};

Graph graph_of(const Fsa& a);
/// Labels carry their kind so that "?a" and "!a" differ.
Graph graph_of(const TransitionSystem& ts);

/// Backtracking search for a bijection that maps root to root and preserves
/// marks and labeled edges.
bool isomorphic(const Graph& g, const Graph& h);

inline bool isomorphic(const Fsa& a, const Fsa& b) { return isomorphic(graph_of(a), graph_of(b)); }

}  // namespace confkit::testing
