#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace indexcode {

// How prune() picks among qualifying vertices and kept arcs.
// Deterministic: smallest vertex, then smallest head. Seeded: uniform picks
// from a generator seeded with `seed`.
struct TieBreak {
  std::optional<std::uint64_t> seed;

  static TieBreak deterministic() { return {}; }
  static TieBreak seeded(std::uint64_t s) { return {s}; }
};

struct RemovedArc {
  Arc removed;
  Arc kept;  // surviving arc with the same tail, served uncoded
  bool operator==(const RemovedArc&) const = default;
};

struct PruneResult {
  FlowGraph pruned;
  // Non-trivial strongly connected components of `pruned`, ordered by
  // smallest vertex, each with its internal arcs.
  std::vector<Subgraph> components;
  // Arcs of `pruned` not inside any component, ascending.
  std::vector<Arc> residual_arcs;
  // In removal order.
  std::vector<RemovedArc> removed_arcs;
  std::size_t iterations = 0;
};

// Repeatedly picks a vertex with more than one outgoing arc, at least one of
// which lies on no cycle of the current graph, and drops every other
// outgoing arc of that vertex. Then splits the result into non-trivial
// strongly connected components plus residual arcs.
PruneResult prune(const FlowGraph& g, const TieBreak& tiebreak = TieBreak::deterministic());

// Sum over components of (|vertices| - 1) plus the residual arc count. For
// prune(g) this is the optimal index codelength of g.
std::size_t optimal_codelength(const PruneResult& pr);

// Convenience: optimal_codelength(prune(g)).
std::size_t optimal_codelength(const FlowGraph& g);

}  // namespace indexcode
