#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "error.hpp"

namespace indexcode {

std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

FlowGraph::FlowGraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) throw Error(Errc::Validation, "vertex count must be non-negative");
  for (const Arc& a : arcs_) {
    if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_) {
      throw Error(Errc::Validation, "arc " + to_string(a) + " references a vertex outside 1.." +
                                        std::to_string(n_));
    }
    if (a.tail == a.head) {
      throw Error(Errc::Validation, "self-loop at vertex " + std::to_string(a.tail));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) throw Error(Errc::Validation, "duplicate arc " + to_string(*dup));

  const auto slots = static_cast<std::size_t>(n_) + 2;
  out_begin_.assign(slots, 0);
  in_begin_.assign(slots, 0);
  for (const Arc& a : arcs_) {
    ++out_begin_[static_cast<std::size_t>(a.tail) + 1];
    ++in_begin_[static_cast<std::size_t>(a.head) + 1];
  }
  for (std::size_t i = 1; i < slots; ++i) {
    out_begin_[i] += out_begin_[i - 1];
    in_begin_[i] += in_begin_[i - 1];
  }
  out_heads_.resize(arcs_.size());
  in_tails_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(out_begin_.begin(), out_begin_.end() - 1);
  std::vector<std::size_t> in_fill(in_begin_.begin(), in_begin_.end() - 1);
  // arcs_ is sorted by tail then head, so both adjacency lists come out ascending.
  for (const Arc& a : arcs_) {
    out_heads_[out_fill[static_cast<std::size_t>(a.tail)]++] = a.head;
    in_tails_[in_fill[static_cast<std::size_t>(a.head)]++] = a.tail;
  }
}

void FlowGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(Errc::Range, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

std::span<const Vertex> FlowGraph::successors(Vertex v) const {
  check_vertex(v);
  const auto i = static_cast<std::size_t>(v);
  return {out_heads_.data() + out_begin_[i], out_begin_[i + 1] - out_begin_[i]};
}

std::span<const Vertex> FlowGraph::predecessors(Vertex v) const {
  check_vertex(v);
  const auto i = static_cast<std::size_t>(v);
  return {in_tails_.data() + in_begin_[i], in_begin_[i + 1] - in_begin_[i]};
}

std::size_t FlowGraph::max_out_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 1; v <= static_cast<std::size_t>(n_); ++v) {
    best = std::max(best, out_begin_[v + 1] - out_begin_[v]);
  }
  return best;
}

bool FlowGraph::has_arc(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool FlowGraph::has_isolated_vertex() const noexcept {
  for (std::size_t v = 1; v <= static_cast<std::size_t>(n_); ++v) {
    if (out_begin_[v + 1] == out_begin_[v] && in_begin_[v + 1] == in_begin_[v]) return true;
  }
  return false;
}

FlowGraph FlowGraph::without(std::span<const Arc> removed) const {
  std::vector<Arc> sorted_removed(removed.begin(), removed.end());
  std::sort(sorted_removed.begin(), sorted_removed.end());
  std::vector<Arc> kept;
  kept.reserve(arcs_.size());
  std::set_difference(arcs_.begin(), arcs_.end(), sorted_removed.begin(), sorted_removed.end(),
                      std::back_inserter(kept));
  return FlowGraph(n_, std::move(kept));
}

Subgraph as_subgraph(const FlowGraph& g) {
  Subgraph s;
  s.vertices.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) s.vertices[static_cast<std::size_t>(v - 1)] = v;
  s.arcs = g.arcs();
  return s;
}

// ---------------------------------------------------------------------------

LabelMap::LabelMap(int original_n, std::vector<Vertex> original_of_internal)
    : original_n_(original_n), original_(std::move(original_of_internal)) {
  for (std::size_t i = 0; i < original_.size(); ++i) {
    if (original_[i] < 1 || original_[i] > original_n_ || (i > 0 && original_[i] <= original_[i - 1])) {
      throw Error(Errc::Internal, "label map must be strictly increasing within 1..n");
    }
  }
}

LabelMap LabelMap::identity(int n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) ids[static_cast<std::size_t>(v - 1)] = v;
  return LabelMap(n, std::move(ids));
}

Vertex LabelMap::to_original(Vertex internal) const {
  if (internal < 1 || internal > internal_vertex_count()) {
    throw Error(Errc::Range, "internal vertex " + std::to_string(internal) + " out of range");
  }
  return original_[static_cast<std::size_t>(internal - 1)];
}

std::optional<Vertex> LabelMap::to_internal(Vertex original) const {
  auto it = std::lower_bound(original_.begin(), original_.end(), original);
  if (it == original_.end() || *it != original) return std::nullopt;
  return static_cast<Vertex>(it - original_.begin()) + 1;
}

PreprocessedGraph preprocess(const FlowGraph& raw) {
  if (raw.arc_count() == 0) {
    throw Error(Errc::Trivial, "graph has no arcs; nothing needs to be sent (l* = 0)");
  }
  // Removing a vertex never removes an arc here (the vertex has none), so a
  // single pass reaches the fixed point.
  const int n = raw.vertex_count();
  std::vector<Vertex> kept;
  std::vector<Vertex> new_label(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (!raw.successors(v).empty() || !raw.predecessors(v).empty()) {
      kept.push_back(v);
      new_label[static_cast<std::size_t>(v)] = static_cast<Vertex>(kept.size());
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(raw.arc_count());
  for (const Arc& a : raw.arcs()) {
    arcs.push_back({new_label[static_cast<std::size_t>(a.tail)],
                    new_label[static_cast<std::size_t>(a.head)]});
  }
  const auto compact_n = static_cast<int>(kept.size());
  return {FlowGraph(compact_n, std::move(arcs)), LabelMap(n, std::move(kept))};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> SccDecomposition::nontrivial() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (is_nontrivial(i)) out.push_back(i);
  }
  return out;
}

SccDecomposition strongly_connected_components(const FlowGraph& g) {
  // Iterative Tarjan.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n + 1, kUnvisited), low(n + 1, 0);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> found;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (Vertex root = 1; root <= static_cast<Vertex>(n); ++root) {
    if (index[static_cast<std::size_t>(root)] != kUnvisited) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.next == 0 && index[v] == kUnvisited) {
        index[v] = low[v] = counter++;
        stack.push_back(f.v);
        on_stack[v] = true;
      }
      auto succ = g.successors(f.v);
      if (f.next < succ.size()) {
        const auto w = static_cast<std::size_t>(succ[f.next++]);
        if (index[w] == kUnvisited) {
          call.push_back({static_cast<Vertex>(w), 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (static_cast<std::size_t>(w) != v);
        std::sort(comp.begin(), comp.end());
        found.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().v);
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SccDecomposition out;
  out.component_of.assign(n + 1, 0);
  for (std::size_t c = 0; c < found.size(); ++c) {
    for (Vertex v : found[c]) out.component_of[static_cast<std::size_t>(v)] = c;
  }
  out.components = std::move(found);
  return out;
}

bool reachable(const FlowGraph& g, Vertex from, Vertex to) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (to < 1 || static_cast<std::size_t>(to) > n) {
    throw Error(Errc::Range, "vertex " + std::to_string(to) + " outside 1.." + std::to_string(n));
  }
  std::vector<bool> seen(n + 1, false);
  std::deque<Vertex> queue;
  // Seed with successors so that a path has at least one arc.
  for (Vertex w : g.successors(from)) {
    if (!seen[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = true;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) return true;
    for (Vertex w : g.successors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

bool arc_on_cycle(const FlowGraph& g, const Arc& arc) {
  if (!g.has_arc(arc)) throw Error(Errc::Argument, "arc " + to_string(arc) + " is not in the graph");
  return reachable(g, arc.head, arc.tail);
}

bool is_acyclic(const FlowGraph& g) {
  const auto scc = strongly_connected_components(g);
  return scc.components.size() == static_cast<std::size_t>(g.vertex_count());
}

VertexOrdering acyclic_order(const FlowGraph& g) {
  // Kahn's algorithm on remaining out-degree: a vertex is placed once all of
  // the vertices it points to are placed. Sinks seed the queue, so they
  // occupy the lowest positions.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::size_t> remaining(n + 1, 0);
  std::deque<Vertex> queue;
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
    remaining[static_cast<std::size_t>(v)] = g.out_degree(v);
    if (remaining[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  VertexOrdering out;
  out.position.assign(n + 1, 0);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    out.position[static_cast<std::size_t>(v)] = out.order.size();
    out.order.push_back(v);
    for (Vertex u : g.predecessors(v)) {
      if (--remaining[static_cast<std::size_t>(u)] == 0) queue.push_back(u);
    }
  }
  if (out.order.size() != n) throw Error(Errc::Validation, "graph contains a cycle");
  return out;
}

}  // namespace indexcode
