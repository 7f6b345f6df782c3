#pragma once

// Edge zeta function of a normal graph via det(I - U M).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zetacone/codegraph.hpp"
#include "zetacone/polyring.hpp"

namespace zetacone {

struct HalfEdge {
  std::size_t base_edge;  // i in 0..n-1
  std::size_t tail;
  std::size_t head;
};

// Half-edges f_0..f_{2n-1}; f_{n+i} is the reversal of f_i and both carry u_{i+1}.
class DirectedEdgeSet {
 public:
  DirectedEdgeSet(std::size_t num_vertices, std::vector<HalfEdge> forward);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return half_.size() / 2; }
  std::size_t size() const noexcept { return half_.size(); }
  const HalfEdge& operator[](std::size_t k) const { return half_[k]; }
  std::size_t reversal(std::size_t k) const noexcept {
    return k < num_edges() ? k + num_edges() : k - num_edges();
  }

 private:
  std::size_t num_vertices_;
  std::vector<HalfEdge> half_;
};

// Canonical orientation: f_i runs from the lower-numbered endpoint check to
// the higher-numbered one.
DirectedEdgeSet orient_edges(const NormalGraph& g);

// Same, but edges with flip[i] set are oriented high -> low.
DirectedEdgeSet orient_edges(const NormalGraph& g, const std::vector<bool>& flip);

// Binary 2n x 2n matrix, m(k,l) = 1 iff f_k feeds into f_l without backtracking.
class DirectedEdgeMatrix {
 public:
  explicit DirectedEdgeMatrix(const DirectedEdgeSet& d);

  std::size_t size() const noexcept { return size_; }
  bool at(std::size_t k, std::size_t l) const { return bits_[k * size_ + l] != 0; }
  // Continuations of f_k, ascending.
  const std::vector<std::size_t>& successors(std::size_t k) const { return succ_[k]; }

 private:
  std::size_t size_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<std::size_t>> succ_;
};

inline DirectedEdgeMatrix directed_edge_matrix(const DirectedEdgeSet& d) {
  return DirectedEdgeMatrix(d);
}

enum class ZetaProduct { um, mu };  // det(I - U M) or det(I - M U)

struct ZetaInverse {
  SparsePolynomial poly;
};

ZetaInverse zeta_inverse(const DirectedEdgeSet& d, ZetaProduct product = ZetaProduct::um);
ZetaInverse zeta_inverse(const NormalGraph& g);

struct ZetaSeries {
  TruncatedSeries series;
  std::uint32_t max_total_degree() const noexcept { return series.max_total_degree(); }
};

ZetaSeries zeta_series(const ZetaInverse& z, std::uint32_t max_degree);

// Exponents of all nonzero terms, ascending grlex (zero vector first).
std::vector<ExponentVector> support_exponents(const ZetaSeries& s);
// Same, limited to exponents with every entry <= max_exponent.
std::vector<ExponentVector> support_exponents(const ZetaSeries& s, std::uint16_t max_exponent);

}  // namespace zetacone
