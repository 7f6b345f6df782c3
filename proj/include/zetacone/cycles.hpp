#pragma once

// Cycle enumeration on the normal graph and the brute-force zeta oracle.
//
// The oracle path here never touches determinants or series inversion: it
// counts multisets of primitive backtrackless tailless cycle classes
// directly, so it independently checks the zeta module.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "zetacone/codegraph.hpp"
#include "zetacone/polyring.hpp"
#include "zetacone/zeta.hpp"

namespace zetacone {

// Closed walk given as half-edge ids of a DirectedEdgeSet.
struct CycleWord {
  std::vector<std::size_t> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool closed(const DirectedEdgeSet& d) const;
  bool backtrackless(const DirectedEdgeSet& d) const;  // no f followed by reversal(f), excluding wrap
  bool tailless(const DirectedEdgeSet& d) const;       // last step is not reversal of first
  bool primitive() const;                              // not a proper power
  std::vector<std::uint32_t> edge_usage(const DirectedEdgeSet& d) const;
  ExponentVector monomial(const DirectedEdgeSet& d) const;
};

// Orients an undirected edge sequence (0-based edge ids) into a closed walk.
// Throws PreconditionError if no orientation makes it a closed walk.
CycleWord cycle_from_edges(const DirectedEdgeSet& d, const std::vector<std::size_t>& edges);

struct CycleClass {
  CycleWord representative;  // lexicographically least rotation
  ExponentVector monomial;
  std::size_t length() const noexcept { return representative.length(); }
};

// Lexicographically least rotation.
CycleWord canonical_rotation(const CycleWord& w);

// Simple cycles as ascending edge-id lists; each cycle once, ordered by
// length then lexicographically.
std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const NormalGraph& g);

// True iff `edges` (distinct ids) induce one connected 2-regular subgraph.
bool is_simple_cycle(const NormalGraph& g, const std::vector<std::size_t>& edges);

// GF(2) sum of characteristic vectors. Throws PreconditionError if a subset is
// not a simple cycle; InternalError if the result fails H c = 0.
std::vector<std::uint8_t> codeword_from_cycles(const NormalGraph& g,
                                               const std::vector<std::vector<std::size_t>>& cycles);

// Every closed backtrackless tailless walk of length 1..max_length, as
// written (all rotations and powers included), ordered by length then
// lexicographically.
std::vector<CycleWord> enumerate_btt_words(const DirectedEdgeSet& d, std::size_t max_length);

// Equivalence classes (under rotation only) of primitive backtrackless
// tailless cycles of length <= max_length, sorted by (length, representative).
std::vector<CycleClass> enumerate_btt_classes(const DirectedEdgeSet& d, std::size_t max_length);
std::vector<CycleClass> enumerate_btt_classes(const NormalGraph& g, std::size_t max_length);

// Number of multisets of cycle classes whose monomials multiply to u^p.
Integer zeta_coefficient_oracle(const NormalGraph& g, const ExponentVector& p);

// All such counts at once for total degree <= max_degree (zero counts omitted).
std::map<ExponentVector, Integer, GrlexLess> cycle_factorization_counts(const NormalGraph& g,
                                                                        std::uint32_t max_degree);

// Exponent guard for the oracle.
inline constexpr std::uint32_t kOracleMaxDegree = 16;

}  // namespace zetacone
