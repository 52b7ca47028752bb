#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "graph.hpp"

namespace indexcode {

enum class GraphKind { AcyclicOd1, StronglyConnected, General };

std::optional<GraphKind> parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

// Random instance on exactly n vertices, none isolated; a pure function of
// (kind, n, seed).
//   AcyclicOd1         random order; each vertex past the first points to at
//                      most one earlier vertex.
//   StronglyConnected  a random cycle grown by appending random trails, then
//                      random chords.
//   General            independent arcs at a random density.
FlowGraph generate_graph(GraphKind kind, int n, std::uint64_t seed);

}  // namespace indexcode
