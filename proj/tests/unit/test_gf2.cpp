#include <doctest.h>

#include <algorithm>
#include <random>

#include "zetacone/gf2.hpp"

using namespace zetacone::gf2;

namespace {

BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  BitVector v(n);
  for (std::size_t k = 0; k < n; ++k) v.set(k, rng() & 1);
  return v;
}

// Brute-force rank: size of the row span.
std::size_t span_rank(const BitMatrix& m) {
  std::size_t count = 0;
  const std::size_t r = m.num_rows();
  std::vector<std::vector<std::uint8_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    BitVector acc(m.num_cols());
    for (std::size_t j = 0; j < r; ++j)
      if (mask >> j & 1) acc ^= m.row(j);
    auto bytes = acc.to_bytes();
    if (std::find(seen.begin(), seen.end(), bytes) == seen.end()) seen.push_back(bytes), ++count;
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < count) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v = BitVector::from_bytes(std::vector<std::uint8_t>{1, 0, 1, 1});
  CHECK(v.size() == 4);
  CHECK(v.popcount() == 3);
  CHECK(v.get(0));
  CHECK_FALSE(v.get(1));
  v.flip(1);
  CHECK(v.popcount() == 4);
  CHECK(v.to_bytes() == std::vector<std::uint8_t>{1, 1, 1, 1});
  BitVector w(4);
  CHECK_FALSE(w.any());
  w.set(2, true);
  CHECK(v.dot(w));
}

TEST_CASE("rank agrees with brute-force span size") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 70;
    BitMatrix m(r, c);
    for (std::size_t j = 0; j < r; ++j) m.row(j) = random_vector(rng, c);
    CHECK(rank(m) == span_rank(m));
  }
}

TEST_CASE("kernel basis spans exactly the null space") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 10;
    BitMatrix m(r, c);
    for (std::size_t j = 0; j < r; ++j) m.row(j) = random_vector(rng, c);
    const auto basis = kernel_basis(m);
    CHECK(basis.size() == c - rank(m));
    for (const auto& b : basis) CHECK_FALSE(m.apply(b).any());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << c); ++x) {
      BitVector v(c);
      for (std::size_t k = 0; k < c; ++k) v.set(k, x >> k & 1);
      CHECK(in_span(basis, v) == !m.apply(v).any());
    }
  }
}
