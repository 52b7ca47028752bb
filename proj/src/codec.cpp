#include "codec.hpp"

#include <algorithm>

#include "error.hpp"

namespace indexcode {

std::vector<Vertex> IndexCode::row_vertices(std::size_t r) const {
  std::vector<Vertex> out;
  for (std::size_t c : encoder.row(r).ones()) out.push_back(static_cast<Vertex>(c) + 1);
  return out;
}

std::string IndexCode::row_label(std::size_t r, const LabelMap& labels) const {
  std::string out;
  for (Vertex v : row_vertices(r)) {
    if (!out.empty()) out += '+';
    out += 'x' + std::to_string(labels.to_original(v));
  }
  return out;
}

IndexCode construct_code(const PruneResult& pr) {
  IndexCode code;
  const auto n = static_cast<std::size_t>(pr.pruned.vertex_count());
  code.message_count = n;
  code.encoder = Gf2Matrix(0, n);
  auto column = [](Vertex v) { return static_cast<std::size_t>(v - 1); };

  for (const Subgraph& component : pr.components) {
    for (std::size_t i = 0; i + 1 < component.vertices.size(); ++i) {
      BitVector row(n);
      row.set(column(component.vertices[i]));
      row.set(column(component.vertices[i + 1]));
      code.encoder.append_row(std::move(row));
    }
  }

  std::vector<Vertex> tails;
  for (const Arc& a : pr.residual_arcs) tails.push_back(a.tail);
  std::sort(tails.begin(), tails.end());
  tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
  for (Vertex t : tails) code.encoder.append_row(BitVector::unit(n, column(t)));

  if (code.length() != optimal_codelength(pr)) {
    throw Error(Errc::Internal, "residual arcs share a tail; the pruned graph is not at its fixed point");
  }
  return code;
}

void derive_decoders(const FlowGraph& g, IndexCode& code) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n != code.message_count) throw Error(Errc::Argument, "graph and code disagree on message count");
  const std::size_t ell = code.length();

  // Receiver i can use span(encoder rows, e_i). With reduced residuals r(.)
  // against the encoder rows, e_j is in that span iff r(e_j) is zero or
  // equals r(e_i).
  const RowReducer reducer(code.encoder);
  code.decoders.assign(n, {});
  for (Vertex receiver = 1; receiver <= g.vertex_count(); ++receiver) {
    auto wants = g.predecessors(receiver);
    if (wants.empty()) continue;
    const auto own = reducer.reduce(BitVector::unit(n, static_cast<std::size_t>(receiver - 1)));
    for (Vertex message : wants) {
      const auto target = reducer.reduce(BitVector::unit(n, static_cast<std::size_t>(message - 1)));
      bool with_own = false;
      BitVector combination = target.combination;
      if (target.residual.any()) {
        if (target.residual != own.residual) {
          throw Error(Errc::Internal, "receiver " + std::to_string(receiver) + " cannot decode x" +
                                          std::to_string(message));
        }
        with_own = true;
        combination ^= own.combination;
      }
      Decoder d{message, BitVector(ell + 1)};
      for (std::size_t r : combination.ones()) d.coefficients.set(r);
      d.coefficients.set(ell, with_own);
      code.decoders[static_cast<std::size_t>(receiver - 1)].push_back(std::move(d));
    }
  }
}

IndexCode build_optimal_code(const FlowGraph& g) {
  IndexCode code = construct_code(prune(g));
  derive_decoders(g, code);
  return code;
}

BitVector encode(const IndexCode& code, const BitVector& message) {
  if (message.size() != code.message_count) {
    throw Error(Errc::Argument, "message has " + std::to_string(message.size()) + " bits, expected " +
                                    std::to_string(code.message_count));
  }
  return code.encoder.multiply(message);
}

BitVector decode(const IndexCode& code, Vertex receiver, bool own_bit, const BitVector& codeword) {
  if (receiver < 1 || static_cast<std::size_t>(receiver) > code.message_count) {
    throw Error(Errc::Range, "receiver " + std::to_string(receiver) + " out of range");
  }
  if (codeword.size() != code.length()) {
    throw Error(Errc::Argument, "codeword has " + std::to_string(codeword.size()) + " bits, expected " +
                                    std::to_string(code.length()));
  }
  if (code.decoders.empty()) throw Error(Errc::Argument, "decoders have not been derived");
  const auto& mine = code.decoders[static_cast<std::size_t>(receiver - 1)];
  BitVector augmented(code.length() + 1);
  for (std::size_t r : codeword.ones()) augmented.set(r);
  augmented.set(code.length(), own_bit);
  BitVector out(mine.size());
  for (std::size_t k = 0; k < mine.size(); ++k) out.set(k, mine[k].coefficients.dot(augmented));
  return out;
}

}  // namespace indexcode
