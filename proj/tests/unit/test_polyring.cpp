#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "zetacone/error.hpp"
#include "zetacone/polyring.hpp"

using namespace zetacone;

namespace {

SparsePolynomial random_poly(std::mt19937_64& rng, std::size_t nv, std::size_t terms, std::uint16_t maxexp) {
  SparsePolynomial p(nv);
  std::uniform_int_distribution<int> c(-4, 4), e(0, maxexp);
  for (std::size_t t = 0; t < terms; ++t) {
    ExponentVector x(nv);
    for (std::size_t i = 0; i < nv; ++i) x.set(i, static_cast<std::uint16_t>(e(rng)));
    p.add_term(x, c(rng));
  }
  return p;
}

// Leibniz expansion over all permutations.
SparsePolynomial leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SparsePolynomial det(m.num_vars());
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    SparsePolynomial term = SparsePolynomial::constant(m.num_vars(), inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < n; ++r) term = term * m.at(r, perm[r]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("grlex order") {
  // Degree first, then p_n, p_{n-1}, ...
  CHECK(grlex_compare({0, 0, 1}, {1, 1, 0}) < 0);
  CHECK(grlex_compare({1, 0, 0}, {0, 1, 0}) < 0);
  CHECK(grlex_compare({0, 1, 0}, {0, 0, 1}) < 0);
  CHECK(grlex_compare({1, 1}, {1, 1}) == 0);
}

TEST_CASE("exponent arithmetic is checked") {
  CHECK((ExponentVector{1, 2} + ExponentVector{3, 4}) == ExponentVector{4, 6});
  CHECK_THROWS_AS(ExponentVector{65535} + ExponentVector{1}, PreconditionError);
  CHECK_THROWS_AS(ExponentVector{0} - ExponentVector{1}, PreconditionError);
  CHECK(ExponentVector{1, 1}.dominated_by({1, 2}));
  CHECK(ExponentVector{1, 2, 3}.to_string() == "(1,2,3)");
}

TEST_CASE("text form") {
  const auto u1 = SparsePolynomial::variable(2, 0), u2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  CHECK((one - SparsePolynomial::monomial({1, 1}, 2)).to_string() == "1-2*u1*u2");
  CHECK((u1 * u1 - u2).to_string() == "-u2+u1^2");
  CHECK(SparsePolynomial(2).to_string() == "0");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_poly(rng, 3, 5, 3), b = random_poly(rng, 3, 5, 3), c = random_poly(rng, 3, 4, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == SparsePolynomial(3));
    if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
    CHECK(poly_mul(a, b, 4) == (a * b).truncated(4));
  }
}

TEST_CASE("determinant agrees with Leibniz expansion") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 5;
    PolyMatrix m(n, 3);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng() % 3) m.at(r, c) = random_poly(rng, 3, 1 + rng() % 3, 2);
    CHECK(poly_det(m) == leibniz_det(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + rng() % 3;
    PolyMatrix a(n, 2), b(n, 2);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        a.at(r, c) = random_poly(rng, 2, 2, 1);
        b.at(r, c) = random_poly(rng, 2, 2, 1);
      }
    CHECK(poly_det(a * b) == poly_det(a) * poly_det(b));
  }
}

TEST_CASE("zero pivot forces a row swap") {
  PolyMatrix m(2, 1);
  m.at(0, 1) = SparsePolynomial::constant(1, 1);
  m.at(1, 0) = SparsePolynomial::variable(1, 0);
  CHECK(poly_det(m) == -SparsePolynomial::variable(1, 0));
}

TEST_CASE("series inverse times p is 1 up to the bound") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    auto p = random_poly(rng, 3, 4, 2);
    p.add_term(ExponentVector(3), Integer(1) - p.constant_term());
    const std::uint32_t d = 6;
    const auto inv = series_inverse(p, d);
    const auto prod = poly_mul(inv.polynomial(), p, d);
    CHECK(prod == SparsePolynomial::constant(3, 1));
  }
  CHECK_THROWS_AS(series_inverse(SparsePolynomial::constant(1, 2), 3), PreconditionError);
}

TEST_CASE("geometric series coefficients") {
  // 1 / (1 - 2u) = sum 2^k u^k
  const auto p = SparsePolynomial::constant(1, 1) - SparsePolynomial::monomial({1}, 2);
  const auto s = series_inverse(p, 10);
  for (std::uint16_t k = 0; k <= 10; ++k) CHECK(s.coefficient({k}) == Integer(1) << k);
  CHECK_THROWS_AS(s.coefficient({11}), PreconditionError);
}
