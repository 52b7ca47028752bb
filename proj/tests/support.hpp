#pragma once

// Test-only helpers. The reachability and decoding checks here are written
// independently of the library's own algorithms so they can serve as
// oracles.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "codec.hpp"
#include "graph.hpp"

namespace testing {

using indexcode::Arc;
using indexcode::FlowGraph;
using indexcode::Vertex;

inline FlowGraph make_graph(int n, std::vector<std::pair<int, int>> arcs) {
  std::vector<Arc> out;
  for (auto [t, h] : arcs) out.push_back({t, h});
  return FlowGraph(n, std::move(out));
}

// closure[u][v]: a path of length >= 1 from u to v (1-based, Warshall).
inline std::vector<std::vector<bool>> transitive_closure(const FlowGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<bool>> c(n + 1, std::vector<bool>(n + 1, false));
  for (const Arc& a : g.arcs()) c[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)] = true;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (!c[i][k]) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        if (c[k][j]) c[i][j] = true;
      }
    }
  }
  return c;
}

// Every graph on exactly n vertices with no isolated vertex.
inline void for_each_valid_graph(int n, const std::function<void(const FlowGraph&)>& visit) {
  std::vector<Arc> pairs;
  for (Vertex t = 1; t <= n; ++t) {
    for (Vertex h = 1; h <= n; ++h) {
      if (t != h) pairs.push_back({t, h});
    }
  }
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<Arc> arcs;
    std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        arcs.push_back(pairs[k]);
        touched[static_cast<std::size_t>(pairs[k].tail)] = touched[static_cast<std::size_t>(pairs[k].head)] = true;
      }
    }
    bool ok = true;
    for (int v = 1; v <= n; ++v) ok = ok && touched[static_cast<std::size_t>(v)];
    if (ok) visit(FlowGraph(n, std::move(arcs)));
  }
}

// Random graph, each ordered pair present with probability p. May contain
// isolated vertices.
inline FlowGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex t = 1; t <= n; ++t) {
    for (Vertex h = 1; h <= n; ++h) {
      if (t != h && coin(rng)) arcs.push_back({t, h});
    }
  }
  return FlowGraph(n, std::move(arcs));
}

// Random DAG: arcs only from higher to lower label after a random relabel.
inline FlowGraph random_dag(int n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (coin(rng)) arcs.push_back({perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]});
    }
  }
  return FlowGraph(n, std::move(arcs));
}

// Counts (receiver, wanted message, message word) triples where decoding
// disagrees with the true bit. Exhaustive over words when n <= max_exhaustive,
// otherwise `samples` random words.
inline std::size_t decode_failures(const FlowGraph& g, const indexcode::IndexCode& code,
                                   int max_exhaustive = 12, std::size_t samples = 1000,
                                   std::uint64_t seed = 1) {
  using indexcode::BitVector;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::size_t failures = 0;
  auto check = [&](const BitVector& word) {
    const auto codeword = indexcode::encode(code, word);
    for (Vertex r = 1; r <= g.vertex_count(); ++r) {
      const auto wants = g.predecessors(r);
      const auto got = indexcode::decode(code, r, word.get(static_cast<std::size_t>(r - 1)), codeword);
      if (got.size() != wants.size()) {
        failures += wants.size() + 1;
        continue;
      }
      for (std::size_t k = 0; k < wants.size(); ++k) {
        if (got.get(k) != word.get(static_cast<std::size_t>(wants[k] - 1))) ++failures;
      }
    }
  };
  if (g.vertex_count() <= max_exhaustive) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      BitVector word(n);
      for (std::size_t i = 0; i < n; ++i) word.set(i, (w >> i) & 1U);
      check(word);
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      BitVector word(n);
      for (std::size_t i = 0; i < n; ++i) word.set(i, rng() & 1U);
      check(word);
    }
  }
  return failures;
}

}  // namespace testing
