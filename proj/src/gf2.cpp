#include "zetacone/gf2.hpp"

#include <bit>
#include <stdexcept>

#include "zetacone/kernels.hpp"

namespace zetacone::gf2 {

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bits) {
  BitVector v(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k] & 1u) v.set(k, true);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  kernels::active().xor_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

bool BitVector::any() const noexcept {
  for (auto w : words_)
    if (w != 0) return true;
  return false;
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t k = 0; k < size_; ++k) out[k] = get(k) ? 1 : 0;
  return out;
}

void BitMatrix::push_row(BitVector row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("BitMatrix row length mismatch");
  rows_.push_back(std::move(row));
}

BitVector BitMatrix::apply(const BitVector& x) const {
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.set(r, rows_[r].dot(x));
  return out;
}

std::vector<std::size_t> row_reduce(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.num_cols() && next < m.num_rows(); ++col) {
    std::size_t p = next;
    while (p < m.num_rows() && !m.row(p).get(col)) ++p;
    if (p == m.num_rows()) continue;
    std::swap(m.row(p), m.row(next));
    for (std::size_t r = 0; r < m.num_rows(); ++r)
      if (r != next && m.row(r).get(col)) m.row(r) ^= m.row(next);
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

std::size_t rank(BitMatrix m) { return row_reduce(m).size(); }

std::vector<BitVector> kernel_basis(BitMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.num_cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.num_cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.num_cols());
    v.set(free, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m.row(r).get(free)) v.set(pivots[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<BitVector>& basis, const BitVector& v) {
  if (basis.empty()) return !v.any();
  BitMatrix m;
  for (const auto& b : basis) m.push_row(b);
  const std::size_t before = rank(m);
  m.push_row(v);
  return rank(std::move(m)) == before;
}

}  // namespace zetacone::gf2
