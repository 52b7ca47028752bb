#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indexcode {

// Fixed-length vector over GF(2), packed 64 bits per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }
  // "0110" -> bits 0..3; index 0 is the leftmost character.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector&) const = default;

  bool any() const noexcept;
  std::size_t popcount() const noexcept;
  std::optional<std::size_t> first_set() const noexcept;
  // Inner product over GF(2).
  bool dot(const BitVector& other) const;
  std::vector<std::size_t> ones() const;
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense binary matrix, row-major.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  explicit Gf2Matrix(std::vector<BitVector> rows, std::size_t cols);
  // Rows given as strings of '0'/'1', all the same length.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);
  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void append_row(BitVector row);

  // Matrix-vector product over GF(2): result[r] = row(r) . x.
  BitVector multiply(const BitVector& x) const;

  // Reduced row echelon form with zero rows dropped.
  Gf2Matrix reduced() const;
  std::size_t rank() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Gaussian elimination of a fixed set of rows that also tracks which input
// rows make up each pivot row. Reducing a target against the pivots yields
// a canonical residual plus the combination of input rows removed from it.
class RowReducer {
 public:
  explicit RowReducer(const Gf2Matrix& m);

  std::size_t rank() const noexcept { return pivots_.size(); }

  struct Reduction {
    BitVector residual;     // target minus span part; zero iff target is in the row span
    BitVector combination;  // over the input rows
  };
  Reduction reduce(const BitVector& target) const;

 private:
  std::size_t input_rows_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;  // pivot column per echelon row
  std::vector<BitVector> echelon_;
  std::vector<BitVector> combos_;
};

std::size_t gf2_rank(const Gf2Matrix& m);

// Some c with sum_r c[r] * row(r) == target, or nullopt when target is
// outside the row space.
std::optional<BitVector> gf2_solve(const Gf2Matrix& m, const BitVector& target);

}  // namespace indexcode
