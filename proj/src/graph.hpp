#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indexcode {

// Vertices are 1-based. Vertex v is receiver v and also the owner of message x_v.
using Vertex = int;

// Arc (tail, head): receiver `head` wants message x_tail.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);

// Information-flow graph on vertices 1..n. Construction enforces the
// simple-graph and no-duplicate conditions; isolated vertices are allowed
// here (pruned graphs and lower-bound witnesses have them) and are removed
// by `preprocess`.
class FlowGraph {
 public:
  FlowGraph() = default;
  FlowGraph(int n, std::vector<Arc> arcs);

  int vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  // Sorted by (tail, head).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  // Heads of outgoing arcs of v, ascending.
  std::span<const Vertex> successors(Vertex v) const;
  // Tails of incoming arcs of v, ascending. These are the messages v wants.
  std::span<const Vertex> predecessors(Vertex v) const;

  std::size_t out_degree(Vertex v) const { return successors(v).size(); }
  std::size_t max_out_degree() const noexcept;
  bool has_arc(const Arc& a) const;
  bool has_isolated_vertex() const noexcept;

  FlowGraph without(std::span<const Arc> removed) const;

  bool operator==(const FlowGraph& other) const noexcept {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_begin_;
  std::vector<Vertex> out_heads_;
  std::vector<std::size_t> in_begin_;
  std::vector<Vertex> in_tails_;
};

// A vertex subset together with arcs among those vertices, labelled in the
// parent graph's numbering.
struct Subgraph {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Arc> arcs;         // ascending
  bool operator==(const Subgraph&) const = default;
};

Subgraph as_subgraph(const FlowGraph& g);

// Maps compacted labels back to the labels used in the input file.
class LabelMap {
 public:
  LabelMap() = default;
  LabelMap(int original_n, std::vector<Vertex> original_of_internal);

  static LabelMap identity(int n);

  int original_vertex_count() const noexcept { return original_n_; }
  int internal_vertex_count() const noexcept { return static_cast<int>(original_.size()); }
  Vertex to_original(Vertex internal) const;
  std::optional<Vertex> to_internal(Vertex original) const;

  bool operator==(const LabelMap&) const = default;

 private:
  int original_n_ = 0;
  std::vector<Vertex> original_;
};

struct PreprocessedGraph {
  FlowGraph graph;
  LabelMap labels;
};

// Drops vertices that touch no arc and relabels the rest 1..n' keeping order.
// Throws Errc::Trivial when the graph has no arcs at all.
PreprocessedGraph preprocess(const FlowGraph& raw);

enum class GraphFormat { EdgeList, Json };

// Parses and preprocesses. Syntax errors carry a line number; validation
// errors name the violated condition in the input's own labels.
PreprocessedGraph parse_graph(std::string_view text, GraphFormat format);
// Same as parse_graph but stops before preprocessing.
FlowGraph parse_raw_graph(std::string_view text, GraphFormat format);

GraphFormat format_for_path(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
PreprocessedGraph load_graph(const std::filesystem::path& path);

std::string to_edge_list(const FlowGraph& g);

// ---------------------------------------------------------------------------
// Structure queries

struct SccDecomposition {
  // Each component ascending; components ordered by their smallest vertex.
  std::vector<std::vector<Vertex>> components;
  // component_of[v] is the index into `components`; entry 0 is unused.
  std::vector<std::size_t> component_of;

  bool is_nontrivial(std::size_t index) const { return components[index].size() >= 2; }
  std::vector<std::size_t> nontrivial() const;
};

SccDecomposition strongly_connected_components(const FlowGraph& g);

// True iff a directed path of length >= 1 leads from `from` to `to`.
bool reachable(const FlowGraph& g, Vertex from, Vertex to);

// True iff the arc lies on some directed cycle. The arc must exist.
bool arc_on_cycle(const FlowGraph& g, const Arc& arc);

bool is_acyclic(const FlowGraph& g);

// order[0..n-1] holds z_1..z_n: for every arc (z_i, z_j) we have i > j,
// and the sinks come first.
struct VertexOrdering {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;  // position[v] = index of v in order; entry 0 unused
};

VertexOrdering acyclic_order(const FlowGraph& g);

}  // namespace indexcode
