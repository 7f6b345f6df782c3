#include "zetacone/zeta.hpp"

#include "zetacone/error.hpp"

namespace zetacone {

DirectedEdgeSet::DirectedEdgeSet(std::size_t num_vertices, std::vector<HalfEdge> forward)
    : num_vertices_(num_vertices), half_(std::move(forward)) {
  const std::size_t n = half_.size();
  half_.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (half_[i].base_edge != i) throw PreconditionError("forward half-edge order must follow edge order");
    if (half_[i].tail >= num_vertices || half_[i].head >= num_vertices)
      throw PreconditionError("half-edge endpoint out of range");
    half_.push_back({i, half_[i].head, half_[i].tail});
  }
}

DirectedEdgeSet orient_edges(const NormalGraph& g) {
  return orient_edges(g, std::vector<bool>(g.num_edges(), false));
}

DirectedEdgeSet orient_edges(const NormalGraph& g, const std::vector<bool>& flip) {
  if (flip.size() != g.num_edges()) throw PreconditionError("one flip flag per edge required");
  std::vector<HalfEdge> forward;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [lo, hi] = g.edges[i];
    if (lo > hi) std::swap(lo, hi);
    forward.push_back(flip[i] ? HalfEdge{i, hi, lo} : HalfEdge{i, lo, hi});
  }
  return DirectedEdgeSet(g.num_vertices, std::move(forward));
}

DirectedEdgeMatrix::DirectedEdgeMatrix(const DirectedEdgeSet& d)
    : size_(d.size()), bits_(size_ * size_, 0), succ_(size_) {
  for (std::size_t k = 0; k < size_; ++k)
    for (std::size_t l = 0; l < size_; ++l)
      if (d[k].head == d[l].tail && l != d.reversal(k)) {
        bits_[k * size_ + l] = 1;
        succ_[k].push_back(l);
      }
}

ZetaInverse zeta_inverse(const DirectedEdgeSet& d, ZetaProduct product) {
  const std::size_t n = d.num_edges();
  const DirectedEdgeMatrix m(d);
  PolyMatrix a(d.size(), n);
  for (std::size_t k = 0; k < d.size(); ++k) a.at(k, k) = SparsePolynomial::constant(n, 1);
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t l : m.successors(k)) {
      // (U M)_{kl} = u(f_k) m_{kl};  (M U)_{kl} = m_{kl} u(f_l).
      const std::size_t var = product == ZetaProduct::um ? d[k].base_edge : d[l].base_edge;
      a.at(k, l) -= SparsePolynomial::variable(n, var);
    }
  return {poly_det(a)};
}

ZetaInverse zeta_inverse(const NormalGraph& g) { return zeta_inverse(orient_edges(g)); }

ZetaSeries zeta_series(const ZetaInverse& z, std::uint32_t max_degree) {
  return {series_inverse(z.poly, max_degree)};
}

std::vector<ExponentVector> support_exponents(const ZetaSeries& s) {
  std::vector<ExponentVector> out;
  for (const auto& [e, c] : s.series.polynomial().terms()) out.push_back(e);
  return out;
}

std::vector<ExponentVector> support_exponents(const ZetaSeries& s, std::uint16_t max_exponent) {
  std::vector<ExponentVector> out;
  const SparsePolynomial boxed = s.series.restricted_to_box(max_exponent);
  for (const auto& [e, c] : boxed.terms()) out.push_back(e);
  return out;
}

}  // namespace zetacone
