#pragma once

namespace indexcode::oracle {

template <typename Visitor>
bool for_each_rref(std::size_t n, std::size_t ell, Visitor&& visit) {
  if (ell > n) return false;
  std::vector<std::uint64_t> rows(ell);
  if (ell == 0) return visit(rows);

  // Pivot columns as an increasing combination.
  std::vector<std::size_t> pivots(ell);
  for (std::size_t i = 0; i < ell; ++i) pivots[i] = i;
  for (;;) {
    std::uint64_t pivot_mask = 0;
    for (auto p : pivots) pivot_mask |= std::uint64_t{1} << p;

    // Free positions: (row, column) with column right of the row's pivot and
    // not itself a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < ell; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!((pivot_mask >> c) & 1U)) free.emplace_back(r, c);
      }
    }
    const std::uint64_t combos = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      for (std::size_t r = 0; r < ell; ++r) rows[r] = std::uint64_t{1} << pivots[r];
      for (std::size_t k = 0; k < free.size(); ++k) {
        if ((bits >> k) & 1U) rows[free[k].first] |= std::uint64_t{1} << free[k].second;
      }
      if (visit(rows)) return true;
    }

    // Next combination.
    std::size_t i = ell;
    while (i > 0 && pivots[i - 1] == n - ell + (i - 1)) --i;
    if (i == 0) return false;
    ++pivots[i - 1];
    for (std::size_t j = i; j < ell; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace indexcode::oracle
