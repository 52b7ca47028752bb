#include "gf2.hpp"

#include <bit>

#include "error.hpp"

namespace indexcode {

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error(Errc::Argument, "bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw Error(Errc::Argument, "bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::any() const noexcept {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw Error(Errc::Argument, "bit vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

Gf2Matrix::Gf2Matrix(std::vector<BitVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw Error(Errc::Argument, "row length differs from column count");
  }
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<BitVector> bits;
  for (const auto& r : rows) bits.push_back(BitVector::from_string(r));
  return Gf2Matrix(std::move(bits), cols);
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void Gf2Matrix::append_row(BitVector row) {
  if (row.size() != cols_) throw Error(Errc::Argument, "row length differs from column count");
  rows_.push_back(std::move(row));
}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) {
    throw Error(Errc::Argument, "vector length " + std::to_string(x.size()) + " differs from column count " +
                                    std::to_string(cols_));
  }
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].dot(x)) out.set(r);
  }
  return out;
}

Gf2Matrix Gf2Matrix::reduced() const {
  std::vector<BitVector> rows = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  return Gf2Matrix(std::move(rows), cols_);
}

std::size_t Gf2Matrix::rank() const { return reduced().rows(); }

// ---------------------------------------------------------------------------

RowReducer::RowReducer(const Gf2Matrix& m) : input_rows_(m.rows()), cols_(m.cols()) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector v = m.row(r);
    BitVector c = BitVector::unit(input_rows_, r);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      if (v.get(pivots_[i])) {
        v ^= echelon_[i];
        c ^= combos_[i];
      }
    }
    const auto lead = v.first_set();
    if (!lead) continue;
    // Keep the echelon rows fully reduced: clear the new pivot column elsewhere.
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
      if (echelon_[i].get(*lead)) {
        echelon_[i] ^= v;
        combos_[i] ^= c;
      }
    }
    pivots_.push_back(*lead);
    echelon_.push_back(std::move(v));
    combos_.push_back(std::move(c));
  }
}

RowReducer::Reduction RowReducer::reduce(const BitVector& target) const {
  if (target.size() != cols_) throw Error(Errc::Argument, "target length differs from column count");
  Reduction out{target, BitVector(input_rows_)};
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (out.residual.get(pivots_[i])) {
      out.residual ^= echelon_[i];
      out.combination ^= combos_[i];
    }
  }
  return out;
}

std::size_t gf2_rank(const Gf2Matrix& m) { return RowReducer(m).rank(); }

std::optional<BitVector> gf2_solve(const Gf2Matrix& m, const BitVector& target) {
  auto red = RowReducer(m).reduce(target);
  if (red.residual.any()) return std::nullopt;
  return red.combination;
}

}  // namespace indexcode
