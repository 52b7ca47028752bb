#include "pruning.hpp"

#include <algorithm>

#include "error.hpp"
#include "random.hpp"

namespace indexcode {
namespace {

struct Candidate {
  Vertex vertex;
  std::vector<Vertex> acyclic_heads;  // heads of outgoing arcs on no cycle
};

std::vector<Candidate> qualifying_vertices(const FlowGraph& g, const SccDecomposition& scc) {
  std::vector<Candidate> out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto succ = g.successors(v);
    if (succ.size() < 2) continue;
    Candidate c{v, {}};
    // An arc lies on a cycle iff both ends share a strongly connected component.
    for (Vertex w : succ) {
      if (scc.component_of[static_cast<std::size_t>(w)] != scc.component_of[static_cast<std::size_t>(v)]) {
        c.acyclic_heads.push_back(w);
      }
    }
    if (!c.acyclic_heads.empty()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

PruneResult prune(const FlowGraph& g, const TieBreak& tiebreak) {
  PruneResult out;
  FlowGraph current = g;
  std::optional<SplitMix64> rng;
  if (tiebreak.seed) rng.emplace(*tiebreak.seed);

  for (;;) {
    const auto scc = strongly_connected_components(current);
    const auto candidates = qualifying_vertices(current, scc);
    if (candidates.empty()) break;

    const Candidate& pick = rng ? candidates[rng->below(candidates.size())] : candidates.front();
    const Vertex keep_head =
        rng ? pick.acyclic_heads[rng->below(pick.acyclic_heads.size())] : pick.acyclic_heads.front();
    const Arc kept{pick.vertex, keep_head};

    std::vector<Arc> removed;
    for (Vertex w : current.successors(pick.vertex)) {
      if (w != keep_head) removed.push_back({pick.vertex, w});
    }
    for (const Arc& r : removed) out.removed_arcs.push_back({r, kept});
    current = current.without(removed);
    ++out.iterations;
    if (out.iterations > g.arc_count()) {
      throw Error(Errc::Internal, "pruning failed to terminate within the arc count");
    }
  }

  const auto scc = strongly_connected_components(current);
  std::vector<std::size_t> component_slot(scc.components.size(), SIZE_MAX);
  for (std::size_t c : scc.nontrivial()) {
    component_slot[c] = out.components.size();
    out.components.push_back({scc.components[c], {}});
  }
  for (const Arc& a : current.arcs()) {
    const auto ct = scc.component_of[static_cast<std::size_t>(a.tail)];
    const auto ch = scc.component_of[static_cast<std::size_t>(a.head)];
    if (ct == ch) {
      // Same component and an arc between distinct vertices: non-trivial.
      out.components[component_slot[ct]].arcs.push_back(a);
    } else {
      out.residual_arcs.push_back(a);
    }
  }
  out.pruned = std::move(current);
  return out;
}

std::size_t optimal_codelength(const PruneResult& pr) {
  std::size_t total = pr.residual_arcs.size();
  for (const Subgraph& c : pr.components) total += c.vertices.size() - 1;
  return total;
}

std::size_t optimal_codelength(const FlowGraph& g) { return optimal_codelength(prune(g)); }

}  // namespace indexcode
