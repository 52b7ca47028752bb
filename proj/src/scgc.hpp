#pragma once

#include <string_view>
#include <vector>

#include "graph.hpp"
#include "pruning.hpp"

namespace indexcode {

// One appended trail k_1 -> k_2 -> ... -> k_K. Its tail and head were already
// in the growing graph; its inner vertices were not.
struct Trail {
  std::vector<Vertex> vertices;
  bool is_cycle = false;  // k_1 == k_K

  Arc first_arc() const { return {vertices[0], vertices[1]}; }
  std::vector<Arc> arcs() const;
};

// Record of how a strongly connected graph is grown from a cycle by
// appending trails.
struct ScgcTrace {
  std::vector<Vertex> initial_cycle;  // c_0 -> c_1 -> ... -> c_0, starting at its smallest vertex
  std::vector<Trail> trails;

  std::vector<Arc> initial_cycle_arcs() const;
  // Union of the initial cycle and all trails.
  Subgraph replay() const;
};

// Decomposes a strongly connected subgraph with at least two vertices.
// The initial cycle is a shortest cycle through the smallest vertex; each
// trail starts at the smallest unused arc leaving the grown vertex set and
// returns to it along a shortest path through new vertices.
ScgcTrace scgc_decompose(const Subgraph& g);
ScgcTrace scgc_decompose(const FlowGraph& g);

enum class Provenance { InitialCycle, Trail, Residual };
std::string_view to_string(Provenance p);

struct WitnessArc {
  Arc arc;
  Provenance provenance;
  bool operator==(const WitnessArc&) const = default;
};

// Acyclic subgraph with maximum outdegree at most one; its arc count is a
// lower bound on the optimal codelength of any graph containing it on the
// same vertex set.
struct LowerBoundCertificate {
  std::vector<Vertex> vertices;
  std::vector<WitnessArc> witness;  // ascending by arc
  std::size_t claimed_length = 0;

  std::vector<Arc> witness_arcs() const;
};

// Deletes the first arc of every trail, then the initial-cycle arc with the
// smallest tail.
LowerBoundCertificate reverse_prune(const ScgcTrace& trace);

// Reverse-prunes every non-trivial component of `pr` and adds the residual
// arcs. `g` supplies the vertex set.
LowerBoundCertificate certificate_for(const FlowGraph& g, const PruneResult& pr);

// Empty string when the certificate is a sound lower bound for g: witness
// arcs are arcs of g, witness is acyclic with outdegree at most one, and the
// claimed length equals the arc count. Otherwise a description of the defect.
std::string check_certificate(const FlowGraph& g, const LowerBoundCertificate& cert);

}  // namespace indexcode
