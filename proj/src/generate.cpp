#include "generate.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "random.hpp"

namespace indexcode {
namespace {

std::vector<Vertex> shuffled_vertices(int n, SplitMix64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) perm[static_cast<std::size_t>(v - 1)] = v;
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

FlowGraph acyclic_od1(int n, SplitMix64& rng) {
  const auto order = shuffled_vertices(n, rng);
  const auto size = order.size();
  std::vector<bool> touched(size, false);  // by position in `order`
  std::vector<bool> has_out(size, false);
  std::vector<Arc> arcs;
  auto link = [&](std::size_t from, std::size_t to) {
    arcs.push_back({order[from], order[to]});
    touched[from] = touched[to] = true;
    has_out[from] = true;
  };
  for (std::size_t p = 1; p < size; ++p) {
    if (rng.chance(4, 5)) link(p, rng.below(p));
  }
  // Only position 1 can point at position 0, so an untouched position 0
  // means position 1 has no arc yet.
  if (!touched[0]) link(1, 0);
  for (std::size_t p = 1; p < size; ++p) {
    if (!touched[p]) link(p, rng.below(p));
  }
  return FlowGraph(n, std::move(arcs));
}

FlowGraph strongly_connected(int n, SplitMix64& rng) {
  const auto perm = shuffled_vertices(n, rng);
  std::set<Arc> arcs;
  std::vector<Vertex> present;

  const std::size_t cycle_len = 2 + rng.below(static_cast<std::size_t>(n) - 1);
  for (std::size_t i = 0; i < cycle_len; ++i) {
    present.push_back(perm[i]);
    arcs.insert({perm[i], perm[(i + 1) % cycle_len]});
  }

  std::size_t next = cycle_len;
  while (next < perm.size()) {
    const Vertex tail = present[rng.below(present.size())];
    const Vertex head = present[rng.below(present.size())];
    const std::size_t inner = 1 + rng.below(std::min<std::size_t>(3, perm.size() - next));
    Vertex prev = tail;
    for (std::size_t k = 0; k < inner; ++k) {
      const Vertex v = perm[next++];
      arcs.insert({prev, v});
      prev = v;
    }
    arcs.insert({prev, head});
    present.insert(present.end(), perm.begin() + static_cast<std::ptrdiff_t>(next - inner),
                   perm.begin() + static_cast<std::ptrdiff_t>(next));
  }

  // Single-arc trails between existing vertices.
  const std::size_t chords = rng.below(static_cast<std::size_t>(n) + 1);
  for (std::size_t c = 0; c < chords; ++c) {
    const Vertex tail = present[rng.below(present.size())];
    const Vertex head = present[rng.below(present.size())];
    if (tail != head) arcs.insert({tail, head});
  }
  return FlowGraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

FlowGraph general(int n, SplitMix64& rng) {
  const std::uint64_t density = 1 + rng.below(5);  // out of 10
  std::set<Arc> arcs;
  for (Vertex t = 1; t <= n; ++t) {
    for (Vertex h = 1; h <= n; ++h) {
      if (t != h && rng.chance(density, 10)) arcs.insert({t, h});
    }
  }
  std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
  for (const Arc& a : arcs) touched[static_cast<std::size_t>(a.tail)] = touched[static_cast<std::size_t>(a.head)] = true;
  for (Vertex v = 1; v <= n; ++v) {
    if (touched[static_cast<std::size_t>(v)]) continue;
    Vertex other = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(n - 1)));
    if (other >= v) ++other;
    arcs.insert(rng.chance(1, 2) ? Arc{v, other} : Arc{other, v});
    touched[static_cast<std::size_t>(v)] = touched[static_cast<std::size_t>(other)] = true;
  }
  return FlowGraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "acyclic-od1") return GraphKind::AcyclicOd1;
  if (name == "strongly-connected") return GraphKind::StronglyConnected;
  if (name == "general") return GraphKind::General;
  return std::nullopt;
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::AcyclicOd1:
      return "acyclic-od1";
    case GraphKind::StronglyConnected:
      return "strongly-connected";
    case GraphKind::General:
      return "general";
  }
  return "unknown";
}

FlowGraph generate_graph(GraphKind kind, int n, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::Argument, "generated graphs need n >= 2");
  SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(kind) << 56));
  switch (kind) {
    case GraphKind::AcyclicOd1:
      return acyclic_od1(n, rng);
    case GraphKind::StronglyConnected:
      return strongly_connected(n, rng);
    case GraphKind::General:
      return general(n, rng);
  }
  throw Error(Errc::Argument, "unknown graph kind");
}

}  // namespace indexcode
