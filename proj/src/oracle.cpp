#include "oracle.hpp"

#include <array>
#include <bit>

#include "error.hpp"

namespace indexcode::oracle {
namespace {

// XOR basis keyed by highest set bit.
class MaskBasis {
 public:
  void insert(std::uint64_t v) {
    for (int b = 63; b >= 0 && v != 0; --b) {
      if (!((v >> b) & 1U)) continue;
      if (basis_[static_cast<std::size_t>(b)] == 0) {
        basis_[static_cast<std::size_t>(b)] = v;
        return;
      }
      v ^= basis_[static_cast<std::size_t>(b)];
    }
  }
  bool contains(std::uint64_t v) const {
    for (int b = 63; b >= 0 && v != 0; --b) {
      if (!((v >> b) & 1U)) continue;
      if (basis_[static_cast<std::size_t>(b)] == 0) return false;
      v ^= basis_[static_cast<std::size_t>(b)];
    }
    return true;
  }

 private:
  std::array<std::uint64_t, 64> basis_{};
};

bool decodable_masks(const DecodabilityInstance& inst, const std::vector<std::uint64_t>& rows) {
  MaskBasis shared;
  for (auto r : rows) shared.insert(r);
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (inst.wants[i].empty()) continue;
    MaskBasis mine = shared;
    mine.insert(std::uint64_t{1} << i);
    for (std::size_t j : inst.wants[i]) {
      if (!mine.contains(std::uint64_t{1} << j)) return false;
    }
  }
  return true;
}

void require_mask_size(std::size_t n) {
  if (n > kMaxMaskMessages) {
    throw Error(Errc::ScaleGuard, "oracle supports at most " + std::to_string(kMaxMaskMessages) + " messages");
  }
}

}  // namespace

DecodabilityInstance DecodabilityInstance::from_graph(const FlowGraph& g) {
  DecodabilityInstance inst;
  inst.n = static_cast<std::size_t>(g.vertex_count());
  inst.wants.resize(inst.n);
  for (const Arc& a : g.arcs()) {
    inst.wants[static_cast<std::size_t>(a.head - 1)].push_back(static_cast<std::size_t>(a.tail - 1));
  }
  return inst;
}

bool is_decodable_linear(const DecodabilityInstance& inst, const Gf2Matrix& encoder) {
  if (encoder.cols() != inst.n) {
    throw Error(Errc::Argument, "encoder has " + std::to_string(encoder.cols()) + " columns, expected " +
                                    std::to_string(inst.n));
  }
  require_mask_size(inst.n);
  std::vector<std::uint64_t> rows;
  for (std::size_t r = 0; r < encoder.rows(); ++r) {
    std::uint64_t m = 0;
    for (std::size_t c = 0; c < inst.n; ++c) {
      if (encoder.get(r, c)) m |= std::uint64_t{1} << c;
    }
    rows.push_back(m);
  }
  return decodable_masks(inst, rows);
}

bool is_decodable_any(const DecodabilityInstance& inst, const EncodingTable& table) {
  if (inst.n >= 31 || table.length >= 31) throw Error(Errc::ScaleGuard, "encoding table too large");
  const std::size_t words = std::size_t{1} << inst.n;
  if (table.codewords.size() != words) {
    throw Error(Errc::Argument, "encoding table has " + std::to_string(table.codewords.size()) +
                                    " entries, expected " + std::to_string(words));
  }
  const std::size_t codes = std::size_t{1} << table.length;
  for (auto c : table.codewords) {
    if (c >= codes) throw Error(Errc::Argument, "codeword wider than the table length");
  }
  // seen[own_bit * codes + codeword] = wanted bits first observed, or -1.
  std::vector<std::int64_t> seen(2 * codes);
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (inst.wants[i].empty()) continue;
    std::uint64_t want_mask = 0;
    for (std::size_t j : inst.wants[i]) want_mask |= std::uint64_t{1} << j;
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t w = 0; w < words; ++w) {
      const std::size_t key = ((w >> i) & 1U) * codes + table.codewords[w];
      const auto wanted = static_cast<std::int64_t>(w & want_mask);
      if (seen[key] < 0) {
        seen[key] = wanted;
      } else if (seen[key] != wanted) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> min_linear_length(const DecodabilityInstance& inst, std::size_t max_l) {
  if (inst.n > kMaxLinearMessages) {
    throw Error(Errc::ScaleGuard, "linear oracle refuses n = " + std::to_string(inst.n) + " (limit " +
                                      std::to_string(kMaxLinearMessages) + ")");
  }
  // A rank-deficient decodable encoder implies a shorter full-rank one with
  // the same row space, which an earlier ell already tried.
  for (std::size_t ell = 0; ell <= std::min(max_l, inst.n); ++ell) {
    const bool found = for_each_rref(inst.n, ell, [&](const std::vector<std::uint64_t>& rows) {
      return decodable_masks(inst, rows);
    });
    if (found) return ell;
  }
  return std::nullopt;
}

std::optional<std::size_t> min_any_length(const DecodabilityInstance& inst, std::size_t max_l) {
  if (inst.n > kMaxAnyMessages || max_l > kMaxAnyLength) {
    throw Error(Errc::ScaleGuard, "unrestricted oracle refuses n = " + std::to_string(inst.n) +
                                      ", max length " + std::to_string(max_l) + " (limits n <= " +
                                      std::to_string(kMaxAnyMessages) + ", length <= " +
                                      std::to_string(kMaxAnyLength) + ")");
  }
  const std::size_t words = std::size_t{1} << inst.n;
  for (std::size_t ell = 0; ell <= max_l; ++ell) {
    const std::uint32_t codes = 1U << ell;
    EncodingTable table{ell, std::vector<std::uint32_t>(words, 0)};
    // Odometer over all codes^words tables.
    for (;;) {
      if (is_decodable_any(inst, table)) return ell;
      std::size_t k = 0;
      while (k < words && ++table.codewords[k] == codes) table.codewords[k++] = 0;
      if (k == words) break;
    }
  }
  return std::nullopt;
}

}  // namespace indexcode::oracle
