#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zetacone::gf2 {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_bytes(std::span<const std::uint8_t> bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  void set(std::size_t k, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (k % 64);
    if (v)
      words_[k / 64] |= mask;
    else
      words_[k / 64] &= ~mask;
  }
  void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }

  BitVector& operator^=(const BitVector& other);
  bool any() const noexcept;
  std::size_t popcount() const noexcept;
  // Parity of popcount(this & other).
  bool dot(const BitVector& other) const;

  std::vector<std::uint8_t> to_bytes() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rows of equal-length bit vectors.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t num_cols() const noexcept { return cols_; }

  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  void push_row(BitVector row);

  // Matrix-vector product over GF(2).
  BitVector apply(const BitVector& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in order.
std::vector<std::size_t> row_reduce(BitMatrix& m);

std::size_t rank(BitMatrix m);

// Basis of { x : m x = 0 }, one basis vector per free column, in increasing
// free-column order.
std::vector<BitVector> kernel_basis(BitMatrix m);

// True iff v lies in the row space spanned by `basis`.
bool in_span(const std::vector<BitVector>& basis, const BitVector& v);

}  // namespace zetacone::gf2
