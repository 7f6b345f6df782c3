#include <doctest.h>

#include <random>

#include "../support/random_codes.hpp"
#include "zetacone/error.hpp"
#include "zetacone/zeta.hpp"

using namespace zetacone;
using testsupport::code_b;

namespace {

SparsePolynomial term(std::initializer_list<std::uint16_t> e, long c) {
  return SparsePolynomial::monomial(ExponentVector(e), c);
}

SparsePolynomial code_b_zeta_inverse() {
  SparsePolynomial p(7);
  p += term({0, 0, 0, 0, 0, 0, 0}, 1);
  p += term({1, 1, 1, 0, 0, 0, 0}, -2);
  p += term({2, 2, 2, 0, 0, 0, 0}, 1);
  p += term({0, 0, 0, 0, 1, 1, 1}, -2);
  p += term({1, 1, 1, 0, 1, 1, 1}, 4);
  p += term({2, 2, 2, 0, 1, 1, 1}, -2);
  p += term({1, 1, 1, 2, 1, 1, 1}, -4);
  p += term({2, 2, 2, 2, 1, 1, 1}, 4);
  p += term({0, 0, 0, 0, 2, 2, 2}, 1);
  p += term({1, 1, 1, 0, 2, 2, 2}, -2);
  p += term({2, 2, 2, 0, 2, 2, 2}, 1);
  p += term({1, 1, 1, 2, 2, 2, 2}, 4);
  p += term({2, 2, 2, 2, 2, 2, 2}, -4);
  return p;
}

// Reference directed edge matrix for Code B with e1 and e7 reversed.
const char* const kReferenceM[14] = {
    "01000000000000", "00110000000000", "10000000000000", "00001000000001", "00000100000000",
    "00000010000000", "00001000001000", "00000000010000", "00000001000000", "00010000100000",
    "00100000100000", "00000000001001", "00000000000100", "00000000000010",
};

}  // namespace

TEST_CASE("Code B zeta inverse is the 13-term polynomial") {
  const auto z = zeta_inverse(build_normal_graph(code_b()));
  CHECK(z.poly.num_terms() == 13);
  CHECK(z.poly == code_b_zeta_inverse());
}

TEST_CASE("Code B Taylor coefficients inside the box p_i <= 2") {
  const auto s = zeta_series(zeta_inverse(build_normal_graph(code_b())), 14);
  const std::pair<ExponentVector, long> expected[] = {
      {{0, 0, 0, 0, 0, 0, 0}, 1},  {{1, 1, 1, 0, 0, 0, 0}, 2},  {{2, 2, 2, 0, 0, 0, 0}, 3},
      {{0, 0, 0, 0, 1, 1, 1}, 2},  {{1, 1, 1, 0, 1, 1, 1}, 4},  {{2, 2, 2, 0, 1, 1, 1}, 6},
      {{1, 1, 1, 2, 1, 1, 1}, 4},  {{2, 2, 2, 2, 1, 1, 1}, 12}, {{0, 0, 0, 0, 2, 2, 2}, 3},
      {{1, 1, 1, 0, 2, 2, 2}, 6},  {{2, 2, 2, 0, 2, 2, 2}, 9},  {{1, 1, 1, 2, 2, 2, 2}, 12},
      {{2, 2, 2, 2, 2, 2, 2}, 36},
  };
  for (const auto& [e, c] : expected) CHECK(s.series.coefficient(e) == c);
  CHECK(s.series.restricted_to_box(2).num_terms() == 13);
  CHECK(support_exponents(s, 2).size() == 13);
  // Beyond the box the series keeps going.
  CHECK(s.series.coefficient({3, 3, 3, 0, 0, 0, 0}) == 4);
}

TEST_CASE("reference M is the canonical orientation with e1 and e7 reversed") {
  std::vector<bool> flip(7, false);
  flip[0] = flip[6] = true;
  const auto m = directed_edge_matrix(orient_edges(build_normal_graph(code_b()), flip));
  for (std::size_t k = 0; k < 14; ++k)
    for (std::size_t l = 0; l < 14; ++l) CHECK(m.at(k, l) == (kReferenceM[k][l] == '1'));
}

TEST_CASE("zeta inverse is independent of orientation and product order") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 15; ++t) {
    const auto g = build_normal_graph(testsupport::random_cycle_code(rng, 8));
    const auto base = zeta_inverse(orient_edges(g)).poly;
    std::vector<bool> flip(g.num_edges());
    for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng() & 1;
    CHECK(zeta_inverse(orient_edges(g, flip)).poly == base);
    CHECK(zeta_inverse(orient_edges(g), ZetaProduct::mu).poly == base);
  }
}

TEST_CASE("directed edge matrix excludes backtracking") {
  const auto d = orient_edges(build_normal_graph(code_b()));
  const auto m = directed_edge_matrix(d);
  for (std::size_t k = 0; k < d.size(); ++k) {
    CHECK_FALSE(m.at(k, d.reversal(k)));
    for (std::size_t l = 0; l < d.size(); ++l)
      CHECK(m.at(k, l) == (d[k].head == d[l].tail && l != d.reversal(k)));
  }
}

TEST_CASE("a forest has zeta inverse 1") {
  const auto tree = testsupport::dense(4, 3, {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1});
  CHECK(zeta_inverse(build_normal_graph(tree)).poly == SparsePolynomial::constant(3, 1));
}

TEST_CASE("triangle: 1/(1 - u1u2u3)^2") {
  const auto tri = testsupport::dense(3, 3, {1, 0, 1, 1, 1, 0, 0, 1, 1});
  const auto z = zeta_inverse(build_normal_graph(tri)).poly;
  const auto c = SparsePolynomial::constant(3, 1) - SparsePolynomial::monomial({1, 1, 1});
  CHECK(z == c * c);
  const auto s = zeta_series(ZetaInverse{z}, 9);
  CHECK(s.series.coefficient({3, 3, 3}) == 4);
}

TEST_CASE("disjoint union multiplies zeta inverses") {
  // Two triangles sharing no vertex.
  std::vector<std::uint8_t> bits(6 * 6, 0);
  auto set = [&](std::size_t r, std::size_t c) { bits[r * 6 + c] = 1; };
  set(0, 0), set(1, 0), set(1, 1), set(2, 1), set(0, 2), set(2, 2);
  set(3, 3), set(4, 3), set(4, 4), set(5, 4), set(3, 5), set(5, 5);
  const auto z = zeta_inverse(build_normal_graph(testsupport::dense(6, 6, bits))).poly;
  const auto one = SparsePolynomial::constant(6, 1);
  const auto a = one - SparsePolynomial::monomial({1, 1, 1, 0, 0, 0});
  const auto b = one - SparsePolynomial::monomial({0, 0, 0, 1, 1, 1});
  CHECK(z == a * a * b * b);
}

TEST_CASE("series coefficients are nonnegative and supported on even-degree vertices") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 10; ++t) {
    const auto h = testsupport::random_cycle_code(rng, 8);
    const auto s = zeta_series(zeta_inverse(build_normal_graph(h)), 8);
    for (const auto& [e, c] : s.series.polynomial().terms()) {
      CHECK(c > 0);
      for (std::size_t j = 0; j < h.num_rows(); ++j) {
        unsigned sum = 0;
        for (auto i : h.row_support(j)) sum += e[i];
        CHECK(sum % 2 == 0);
      }
    }
  }
}

TEST_CASE("orientation flags must match the edge count") {
  CHECK_THROWS_AS(orient_edges(build_normal_graph(code_b()), std::vector<bool>(3)), PreconditionError);
}
