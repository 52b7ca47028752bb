#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gf2.hpp"
#include "graph.hpp"

namespace indexcode::oracle {

// Exhaustive searches are only attempted below these sizes.
inline constexpr std::size_t kMaxLinearMessages = 8;
inline constexpr std::size_t kMaxAnyMessages = 3;
inline constexpr std::size_t kMaxAnyLength = 2;
// Bitmask representation limit for the decodability checks themselves.
inline constexpr std::size_t kMaxMaskMessages = 64;

// Receiver i (0-based here) knows exactly message i and wants the messages
// listed in wants[i].
struct DecodabilityInstance {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> wants;

  static DecodabilityInstance from_graph(const FlowGraph& g);
};

// Every receiver i can reach each wanted e_j inside span(encoder rows, e_i).
bool is_decodable_linear(const DecodabilityInstance& inst, const Gf2Matrix& encoder);

// Arbitrary encoder as a lookup table: codewords[w] is the codeword for the
// message word whose bit k holds message k.
struct EncodingTable {
  std::size_t length = 0;
  std::vector<std::uint32_t> codewords;
};

// No receiver sees two message words that agree on its own bit and produce
// the same codeword, yet differ on something it wants.
bool is_decodable_any(const DecodabilityInstance& inst, const EncodingTable& table);

// Smallest ell <= max_l admitting a decodable linear encoder, searching one
// representative (reduced row echelon form of full rank) per row space.
// nullopt when none exists up to max_l. Throws Errc::ScaleGuard above
// kMaxLinearMessages.
std::optional<std::size_t> min_linear_length(const DecodabilityInstance& inst, std::size_t max_l);

// Smallest ell <= max_l admitting any decodable encoding function. Throws
// Errc::ScaleGuard unless n <= kMaxAnyMessages and max_l <= kMaxAnyLength.
std::optional<std::size_t> min_any_length(const DecodabilityInstance& inst, std::size_t max_l);

// Visits every full-rank ell x n matrix in reduced row echelon form, as row
// bitmasks. The visitor returns true to stop early. Returns whether stopped.
template <typename Visitor>
bool for_each_rref(std::size_t n, std::size_t ell, Visitor&& visit);

}  // namespace indexcode::oracle

#include "oracle_rref.inl"
