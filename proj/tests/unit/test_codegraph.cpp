#include <doctest.h>

#include <random>
#include <sstream>

#include "../support/random_codes.hpp"
#include "zetacone/codegraph.hpp"
#include "zetacone/error.hpp"

using namespace zetacone;
using testsupport::code_a;
using testsupport::code_b;

namespace {

// Independent alist writer: straight from the format description.
std::string reference_alist(const ParityCheckMatrix& h) {
  std::ostringstream o;
  const std::size_t n = h.num_cols(), m = h.num_rows();
  std::vector<std::vector<std::size_t>> cols(n), rows(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (h.at(j, i)) cols[i].push_back(j + 1), rows[j].push_back(i + 1);
  std::size_t cmax = 0, rmax = 0;
  for (auto& c : cols) cmax = std::max(cmax, c.size());
  for (auto& r : rows) rmax = std::max(rmax, r.size());
  o << n << ' ' << m << '\n' << cmax << ' ' << rmax << '\n';
  for (std::size_t i = 0; i < n; ++i) o << cols[i].size() << (i + 1 < n ? ' ' : '\n');
  for (std::size_t j = 0; j < m; ++j) o << rows[j].size() << (j + 1 < m ? ' ' : '\n');
  for (auto& c : cols) {
    for (std::size_t k = 0; k < cmax; ++k) o << (k < c.size() ? c[k] : 0) << (k + 1 < cmax ? ' ' : '\n');
  }
  for (auto& r : rows) {
    for (std::size_t k = 0; k < rmax; ++k) o << (k < r.size() ? r[k] : 0) << (k + 1 < rmax ? ' ' : '\n');
  }
  return o.str();
}

// Minimum nonzero codeword weight by exhaustive search.
std::size_t min_distance(const ParityCheckMatrix& h) {
  const std::size_t n = h.num_cols();
  std::size_t best = 0;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (std::size_t j = 0; j < h.num_rows() && ok; ++j) {
      unsigned s = 0;
      for (auto i : h.row_support(j)) s ^= (x >> i) & 1;
      ok = s == 0;
    }
    const auto w = static_cast<std::size_t>(__builtin_popcountll(x));
    if (ok && (best == 0 || w < best)) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("dense parsing with comments and blank lines") {
  const auto h = parse_parity_check("# Code A\n1 1 1 0\n\n0 1 1 1   # trailing\n", MatrixFormat::dense);
  CHECK(h == code_a());
  CHECK(h.num_ones() == 6);
  CHECK(h.row_support(1) == std::vector<std::size_t>{1, 2, 3});
  CHECK(h.col_support(0) == std::vector<std::size_t>{0});
}

TEST_CASE("dense parse errors carry line numbers") {
  try {
    parse_parity_check("1 1 0\n1 0\n", MatrixFormat::dense);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_parity_check("1 2 0\n", MatrixFormat::dense), ParseError);
  CHECK_THROWS_AS(parse_parity_check("", MatrixFormat::dense), ParseError);
  CHECK_THROWS_AS(parse_parity_check("1 0\n1 0\n", MatrixFormat::dense), ValidationError);
}

TEST_CASE("alist round trip and reference encoder") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto h = testsupport::random_cycle_code(rng, 12);
    CHECK(to_alist(h) == reference_alist(h));
    CHECK(parse_parity_check(to_alist(h), MatrixFormat::alist) == h);
    CHECK(parse_parity_check(to_dense(h), MatrixFormat::dense) == h);
  }
  CHECK(parse_parity_check(reference_alist(code_a()), MatrixFormat::alist) == code_a());
}

TEST_CASE("alist inconsistencies are rejected") {
  // Row list disagrees with the column lists.
  const std::string bad = "2 1\n1 2\n1 1\n2\n1\n1\n1 1\n";
  CHECK_THROWS_AS(parse_parity_check(bad, MatrixFormat::alist), ParseError);
  CHECK_THROWS_AS(parse_parity_check("2 1\n1 2\n1 1\n2\n1\n1\n1 2\n9\n", MatrixFormat::alist), ParseError);
}

TEST_CASE("format names and guessing") {
  CHECK(parse_matrix_format("alist") == MatrixFormat::alist);
  CHECK(parse_matrix_format("dense") == MatrixFormat::dense);
  CHECK_FALSE(parse_matrix_format("csv"));
  CHECK(guess_format("x/code.alist") == MatrixFormat::alist);
  CHECK(guess_format("code.txt") == MatrixFormat::dense);
}

TEST_CASE("cycle-code detection and normal graph") {
  CHECK_FALSE(is_cycle_code(code_a()));
  CHECK_THROWS_AS(build_normal_graph(code_a()), ValidationError);
  CHECK(is_cycle_code(code_b()));
  const auto g = build_normal_graph(code_b());
  CHECK(g.num_vertices == 6);
  CHECK(g.num_edges() == 7);
  CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(g.edges[3] == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(incidence_matrix(g) == code_b());
  const auto tg = build_tanner_graph(code_b());
  CHECK(tg.edges.size() == 14);
}

TEST_CASE("parallel edges need the multigraph flag") {
  const auto h = testsupport::dense(2, 3, {1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(build_normal_graph(h), ValidationError);
  const auto g = build_normal_graph(h, {true});
  CHECK(g.multigraph);
  CHECK(graph_stats(g).girth == 2);
}

TEST_CASE("graph statistics on Code B") {
  const auto s = graph_stats(build_normal_graph(code_b()));
  CHECK(s.girth == 3);
  CHECK(s.num_components == 1);
  CHECK(s.cycle_rank == 2);
  CHECK(s.euler_characteristic == -1);
  CHECK(gf2_rank(code_b()) == 5);
}

TEST_CASE("girth equals minimum distance and cycle rank equals dimension") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto h = testsupport::random_cycle_code(rng, 12);
    const auto s = graph_stats(build_normal_graph(h));
    REQUIRE(s.girth);
    CHECK(*s.girth == min_distance(h));
    CHECK(s.cycle_rank == h.num_cols() - gf2_rank(h));
  }
  const auto tree = testsupport::dense(3, 2, {1, 0, 1, 1, 0, 1});
  const auto s = graph_stats(build_normal_graph(tree));
  CHECK_FALSE(s.girth);
  CHECK(s.cycle_rank == 0);
}
