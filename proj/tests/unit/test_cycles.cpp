#include <doctest.h>

#include <random>

#include "../support/random_codes.hpp"
#include "zetacone/cycles.hpp"
#include "zetacone/error.hpp"
#include "zetacone/gf2.hpp"
#include "zetacone/zeta.hpp"

using namespace zetacone;
using testsupport::code_b;

namespace {

// tr(M^L) by plain integer matrix powers.
std::uint64_t trace_power(const DirectedEdgeMatrix& m, std::size_t len) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> p(n * n, 0), q(n * n);
  for (std::size_t k = 0; k < n; ++k) p[k * n + k] = 1;
  for (std::size_t s = 0; s < len; ++s) {
    std::fill(q.begin(), q.end(), 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (p[a * n + b])
          for (std::size_t c = 0; c < n; ++c) q[a * n + c] += p[a * n + b] * m.at(b, c);
    std::swap(p, q);
  }
  std::uint64_t t = 0;
  for (std::size_t k = 0; k < n; ++k) t += p[k * n + k];
  return t;
}

ParityCheckMatrix complete_graph_k4() {
  testsupport::RandomGraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return testsupport::incidence(g);
}

}  // namespace

TEST_CASE("simple cycles of K4 and Code B") {
  const auto k4 = enumerate_simple_cycles(build_normal_graph(complete_graph_k4()));
  CHECK(k4.size() == 7);
  std::size_t triangles = 0;
  for (const auto& c : k4) triangles += c.size() == 3;
  CHECK(triangles == 4);
  const auto b = enumerate_simple_cycles(build_normal_graph(code_b()));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(b[1] == std::vector<std::size_t>{4, 5, 6});
  CHECK(is_simple_cycle(build_normal_graph(code_b()), {0, 1, 2}));
  CHECK_FALSE(is_simple_cycle(build_normal_graph(code_b()), {0, 1, 2, 4, 5, 6}));
}

TEST_CASE("cycle word predicates") {
  const auto g = build_normal_graph(code_b());
  const auto d = orient_edges(g);
  const auto w = cycle_from_edges(d, {0, 1, 3, 4, 5, 6, 3, 2});
  CHECK(w.closed(d));
  CHECK(w.backtrackless(d));
  CHECK(w.tailless(d));
  CHECK(w.primitive());
  CHECK(w.monomial(d) == ExponentVector{1, 1, 1, 2, 1, 1, 1});
  CycleWord sq{w.steps};
  sq.steps.insert(sq.steps.end(), w.steps.begin(), w.steps.end());
  CHECK_FALSE(sq.primitive());
  CHECK_THROWS_AS(cycle_from_edges(d, {0, 1}), PreconditionError);
  const auto r = canonical_rotation(w);
  CHECK(std::is_permutation(r.steps.begin(), r.steps.end(), w.steps.begin()));
  CHECK(canonical_rotation(r).steps == r.steps);
}

TEST_CASE("closed-walk counts match trace of powers of M") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 8; ++t) {
    const auto g = build_normal_graph(testsupport::random_cycle_code(rng, 8));
    const auto d = orient_edges(g);
    const auto m = directed_edge_matrix(d);
    const std::size_t maxlen = 7;
    const auto words = enumerate_btt_words(d, maxlen);
    const auto classes = enumerate_btt_classes(d, maxlen);
    for (std::size_t len = 1; len <= maxlen; ++len) {
      std::uint64_t nw = 0, from_classes = 0;
      for (const auto& w : words) nw += w.length() == len;
      for (const auto& c : classes)
        if (len % c.length() == 0) from_classes += c.length();
      CHECK(nw == trace_power(m, len));
      CHECK(from_classes == nw);
    }
  }
}

TEST_CASE("Code B class counts") {
  const auto classes = enumerate_btt_classes(build_normal_graph(code_b()), 8);
  std::size_t by_len[9] = {};
  for (const auto& c : classes) ++by_len[c.length()];
  CHECK(by_len[3] == 4);
  CHECK(by_len[6] == 0);
  CHECK(by_len[4] + by_len[5] + by_len[7] == 0);
  CHECK(by_len[8] == 4);  // each triangle once, either direction, bridge e4 twice
}

TEST_CASE("cycle oracle values") {
  const auto g = build_normal_graph(code_b());
  CHECK(zeta_coefficient_oracle(g, {1, 1, 1, 0, 0, 0, 0}) == 2);
  CHECK(zeta_coefficient_oracle(g, {2, 2, 2, 2, 1, 1, 1}) == 12);
  CHECK(zeta_coefficient_oracle(g, {1, 0, 0, 0, 0, 0, 0}) == 0);
  CHECK(zeta_coefficient_oracle(g, {0, 0, 0, 0, 0, 0, 0}) == 1);
  CHECK_THROWS_AS(zeta_coefficient_oracle(g, {3, 3, 3, 0, 3, 3, 3}), PreconditionError);
}

TEST_CASE("simple cycles span the code") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 25; ++t) {
    const auto h = testsupport::random_cycle_code(rng, 12);
    const auto g = build_normal_graph(h);
    gf2::BitMatrix hm, cyc;
    for (std::size_t j = 0; j < h.num_rows(); ++j) {
      gf2::BitVector r(h.num_cols());
      for (auto i : h.row_support(j)) r.set(i, true);
      hm.push_row(r);
    }
    const auto simple = enumerate_simple_cycles(g);
    for (const auto& c : simple) {
      const auto bits = codeword_from_cycles(g, {c});
      cyc.push_row(gf2::BitVector::from_bytes(bits));
      CHECK_FALSE(hm.apply(cyc.row(cyc.num_rows() - 1)).any());
    }
    const auto kernel = gf2::kernel_basis(hm);
    CHECK(gf2::rank(cyc) == kernel.size());
    for (std::size_t r = 0; r < cyc.num_rows(); ++r) CHECK(gf2::in_span(kernel, cyc.row(r)));
  }
}
