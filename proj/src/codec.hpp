#pragma once

#include <string>
#include <vector>

#include "gf2.hpp"
#include "graph.hpp"
#include "pruning.hpp"

namespace indexcode {

// How receiver i recovers one wanted message: XOR of the selected codeword
// bits, plus its own bit when the last coefficient is set.
struct Decoder {
  Vertex message = 0;
  BitVector coefficients;  // length ell + 1; index ell is the receiver's own bit

  bool uses_own_bit() const { return coefficients.get(coefficients.size() - 1); }
};

// Linear index code over n single-bit messages. Column j-1 of the encoder
// carries x_j; row r is one transmitted bit.
struct IndexCode {
  std::size_t message_count = 0;
  Gf2Matrix encoder;
  // decoders[i-1] serves receiver i, ascending by message. Empty until
  // derive_decoders runs.
  std::vector<std::vector<Decoder>> decoders;

  std::size_t length() const { return encoder.rows(); }
  // Vertices XORed in row r, ascending.
  std::vector<Vertex> row_vertices(std::size_t r) const;
  // "x1+x2" style, in the labels given by `labels`.
  std::string row_label(std::size_t r, const LabelMap& labels) const;
};

// XOR chain over each component's ascending vertices, then one uncoded row
// per distinct residual tail. Rows equal optimal_codelength(pr).
IndexCode construct_code(const PruneResult& pr);

// Fills decoders for every arc of `g` (the unpruned graph). Throws
// Errc::Internal if some wanted message is not decodable.
void derive_decoders(const FlowGraph& g, IndexCode& code);

// prune + construct_code + derive_decoders.
IndexCode build_optimal_code(const FlowGraph& g);

BitVector encode(const IndexCode& code, const BitVector& message);

// Wanted bits of `receiver`, ascending by message index.
BitVector decode(const IndexCode& code, Vertex receiver, bool own_bit, const BitVector& codeword);

}  // namespace indexcode
