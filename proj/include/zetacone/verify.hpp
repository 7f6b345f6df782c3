#pragma once

// Three-way cross-check for a cycle code at a total-degree bound D:
//   zeta support (determinant + series inversion)
//   = even-parity lattice points of the fundamental cone
//   = monomials realized by products of backtrackless tailless cycles
// plus coefficient-level agreement between the series and the cycle oracle.

#include <cstdint>
#include <vector>

#include "zetacone/codegraph.hpp"
#include "zetacone/cone.hpp"
#include "zetacone/polyring.hpp"

namespace zetacone {

struct EquivalenceReport {
  std::uint32_t degree_bound = 0;
  SparsePolynomial zeta_inverse;
  std::size_t zeta_support_count = 0;
  std::size_t oracle_support_count = 0;
  NewtonReport newton;  // zeta support vs lattice points
  std::vector<ExponentVector> oracle_mismatches;  // coefficient differs between series and oracle

  bool passed() const noexcept { return newton.passed() && oracle_mismatches.empty(); }
};

EquivalenceReport verify_equivalence(const ParityCheckMatrix& h, std::uint32_t degree_bound,
                                     NormalGraphOptions options = {});

}  // namespace zetacone
