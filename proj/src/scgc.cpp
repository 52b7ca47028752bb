#include "scgc.hpp"

#include <algorithm>
#include <deque>

#include "error.hpp"

namespace indexcode {
namespace {

// Adjacency over a subgraph's vertices, addressed by position in the
// ascending vertex list.
class LocalGraph {
 public:
  explicit LocalGraph(const Subgraph& g) : vertices_(g.vertices), succ_(g.vertices.size()) {
    if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
        std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw Error(Errc::Argument, "subgraph vertices must be ascending and distinct");
    }
    for (const Arc& a : g.arcs) {
      succ_[local(a.tail)].push_back(local(a.head));
    }
    for (auto& s : succ_) std::sort(s.begin(), s.end());
  }

  std::size_t size() const { return vertices_.size(); }
  Vertex label(std::size_t i) const { return vertices_[i]; }
  const std::vector<std::size_t>& successors(std::size_t i) const { return succ_[i]; }

  std::size_t local(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw Error(Errc::Argument, "arc endpoint " + std::to_string(v) + " is not a subgraph vertex");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  bool strongly_connected() const {
    if (size() < 2) return false;
    std::vector<std::vector<std::size_t>> pred(size());
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t w : succ_[u]) pred[w].push_back(u);
    }
    return covers_all(succ_) && covers_all(pred);
  }

 private:
  bool covers_all(const std::vector<std::vector<std::size_t>>& adj) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == size();
  }

  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::size_t>> succ_;
};

std::vector<std::size_t> shortest_cycle_through(const LocalGraph& g, std::size_t start) {
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> parent(g.size(), kNone);
  std::deque<std::size_t> queue{start};
  parent[start] = start;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.successors(u)) {
      if (w == start) {
        std::vector<std::size_t> cycle;
        for (std::size_t x = u; x != start; x = parent[x]) cycle.push_back(x);
        cycle.push_back(start);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (parent[w] == kNone) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  throw Error(Errc::Internal, "no cycle through the start vertex of a strongly connected graph");
}

// Shortest path from `from` (outside the grown set) to any vertex in the
// grown set, using only vertices outside it before the last step.
std::vector<std::size_t> path_back_to_set(const LocalGraph& g, std::size_t from,
                                          const std::vector<bool>& in_set) {
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> parent(g.size(), kNone);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.successors(u)) {
      if (in_set[w]) {
        std::vector<std::size_t> path{w};
        for (std::size_t x = u;; x = parent[x]) {
          path.push_back(x);
          if (x == from) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (parent[w] == kNone) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  throw Error(Errc::Internal, "no path back to the grown subgraph");
}

}  // namespace

std::vector<Arc> Trail::arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back({vertices[i], vertices[i + 1]});
  return out;
}

std::vector<Arc> ScgcTrace::initial_cycle_arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < initial_cycle.size(); ++i) {
    out.push_back({initial_cycle[i], initial_cycle[(i + 1) % initial_cycle.size()]});
  }
  return out;
}

Subgraph ScgcTrace::replay() const {
  Subgraph s;
  s.vertices = initial_cycle;
  s.arcs = initial_cycle_arcs();
  for (const Trail& t : trails) {
    s.vertices.insert(s.vertices.end(), t.vertices.begin(), t.vertices.end());
    auto arcs = t.arcs();
    s.arcs.insert(s.arcs.end(), arcs.begin(), arcs.end());
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
  std::sort(s.arcs.begin(), s.arcs.end());
  s.arcs.erase(std::unique(s.arcs.begin(), s.arcs.end()), s.arcs.end());
  return s;
}

ScgcTrace scgc_decompose(const Subgraph& input) {
  LocalGraph g(input);
  if (!g.strongly_connected()) {
    throw Error(Errc::Argument, "graph is not strongly connected (or has fewer than two vertices)");
  }

  ScgcTrace trace;
  std::vector<bool> in_set(g.size(), false);
  std::vector<std::vector<bool>> used(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) used[u].assign(g.successors(u).size(), false);
  auto mark_arc = [&](std::size_t u, std::size_t w) {
    const auto& s = g.successors(u);
    used[u][static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), w) - s.begin())] = true;
  };

  const auto cycle = shortest_cycle_through(g, 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    in_set[cycle[i]] = true;
    mark_arc(cycle[i], cycle[(i + 1) % cycle.size()]);
    trace.initial_cycle.push_back(g.label(cycle[i]));
  }

  std::size_t remaining = input.arcs.size() - cycle.size();
  while (remaining > 0) {
    // Smallest unused arc whose tail is already in the grown set. Local
    // indices follow label order, so this is also the smallest by label.
    std::size_t k1 = SIZE_MAX, k2 = SIZE_MAX;
    for (std::size_t u = 0; u < g.size() && k1 == SIZE_MAX; ++u) {
      if (!in_set[u]) continue;
      const auto& s = g.successors(u);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!used[u][i]) {
          k1 = u;
          k2 = s[i];
          break;
        }
      }
    }
    if (k1 == SIZE_MAX) throw Error(Errc::Internal, "no qualifying trail found before exhausting arcs");

    std::vector<std::size_t> local_trail{k1};
    if (in_set[k2]) {
      local_trail.push_back(k2);
    } else {
      auto rest = path_back_to_set(g, k2, in_set);
      local_trail.insert(local_trail.end(), rest.begin(), rest.end());
    }

    Trail t;
    for (std::size_t i = 0; i < local_trail.size(); ++i) {
      t.vertices.push_back(g.label(local_trail[i]));
      if (i + 1 < local_trail.size()) mark_arc(local_trail[i], local_trail[i + 1]);
    }
    for (std::size_t x : local_trail) in_set[x] = true;
    t.is_cycle = local_trail.front() == local_trail.back();
    remaining -= local_trail.size() - 1;
    trace.trails.push_back(std::move(t));
  }
  return trace;
}

ScgcTrace scgc_decompose(const FlowGraph& g) { return scgc_decompose(as_subgraph(g)); }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::InitialCycle:
      return "initial-cycle";
    case Provenance::Trail:
      return "trail";
    case Provenance::Residual:
      return "residual";
  }
  return "unknown";
}

std::vector<Arc> LowerBoundCertificate::witness_arcs() const {
  std::vector<Arc> out;
  out.reserve(witness.size());
  for (const auto& w : witness) out.push_back(w.arc);
  return out;
}

LowerBoundCertificate reverse_prune(const ScgcTrace& trace) {
  if (trace.initial_cycle.size() < 2) throw Error(Errc::Argument, "trace has no initial cycle");
  std::vector<Arc> dropped;
  for (const Trail& t : trace.trails) dropped.push_back(t.first_arc());
  auto cycle_arcs = trace.initial_cycle_arcs();
  dropped.push_back(*std::min_element(cycle_arcs.begin(), cycle_arcs.end()));
  std::sort(dropped.begin(), dropped.end());
  std::sort(cycle_arcs.begin(), cycle_arcs.end());

  const Subgraph all = trace.replay();
  LowerBoundCertificate cert;
  cert.vertices = all.vertices;
  for (const Arc& a : all.arcs) {
    if (std::binary_search(dropped.begin(), dropped.end(), a)) continue;
    const bool from_cycle = std::binary_search(cycle_arcs.begin(), cycle_arcs.end(), a);
    cert.witness.push_back({a, from_cycle ? Provenance::InitialCycle : Provenance::Trail});
  }
  cert.claimed_length = all.vertices.size() - 1;
  return cert;
}

LowerBoundCertificate certificate_for(const FlowGraph& g, const PruneResult& pr) {
  LowerBoundCertificate cert;
  cert.vertices = as_subgraph(g).vertices;
  for (const Subgraph& component : pr.components) {
    const auto part = reverse_prune(scgc_decompose(component));
    cert.witness.insert(cert.witness.end(), part.witness.begin(), part.witness.end());
    cert.claimed_length += part.claimed_length;
  }
  for (const Arc& a : pr.residual_arcs) cert.witness.push_back({a, Provenance::Residual});
  cert.claimed_length += pr.residual_arcs.size();
  std::sort(cert.witness.begin(), cert.witness.end(),
            [](const WitnessArc& x, const WitnessArc& y) { return x.arc < y.arc; });
  return cert;
}

std::string check_certificate(const FlowGraph& g, const LowerBoundCertificate& cert) {
  const auto& all = as_subgraph(g).vertices;
  if (cert.vertices != all) return "witness vertex set differs from the graph's";
  auto arcs = cert.witness_arcs();
  for (const Arc& a : arcs) {
    if (!g.has_arc(a)) return "witness arc " + to_string(a) + " is not an arc of the graph";
  }
  FlowGraph witness;
  try {
    witness = FlowGraph(g.vertex_count(), arcs);
  } catch (const Error& e) {
    return std::string("witness is not a simple graph: ") + e.what();
  }
  if (witness.max_out_degree() > 1) return "witness has a vertex with outdegree above one";
  if (!is_acyclic(witness)) return "witness contains a cycle";
  if (witness.arc_count() != cert.claimed_length) {
    return "claimed length " + std::to_string(cert.claimed_length) + " differs from witness arc count " +
           std::to_string(witness.arc_count());
  }
  return {};
}

}  // namespace indexcode
