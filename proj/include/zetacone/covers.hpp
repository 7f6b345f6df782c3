#pragma once

// Finite covers of Tanner graphs, their codes, pseudo-codewords, and lifts of
// backtrackless tailless cycles to simple cycles in covers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zetacone/codegraph.hpp"
#include "zetacone/cycles.hpp"
#include "zetacone/zeta.hpp"

namespace zetacone {

// perms[{j,i}][m] = pi_{j,i}(m): copy m of check j meets copy pi(m) of bit i.
// All indices 0-based.
struct CoverSpec {
  std::size_t degree = 1;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> perms;

  friend bool operator==(const CoverSpec&, const CoverSpec&) = default;
};

// Throws ValidationError if a permutation is not a bijection on 0..M-1 or the
// key set differs from the support of H.
void validate_cover_spec(const ParityCheckMatrix& h, const CoverSpec& spec);

CoverSpec identity_cover_spec(const ParityCheckMatrix& h, std::size_t degree);

// Independent uniform permutations per support entry, reproducible from seed
// across platforms.
CoverSpec random_cover_spec(const ParityCheckMatrix& h, std::size_t degree, std::uint64_t seed);

struct LiftedParityCheck {
  ParityCheckMatrix base;
  CoverSpec spec;
  // Row j*M + m is check copy (j,m); column i*M + m' is bit copy (i,m').
  ParityCheckMatrix lifted;
};

LiftedParityCheck build_cover(const ParityCheckMatrix& h, const CoverSpec& spec);

struct CoverCodeword {
  std::size_t degree = 1;
  std::vector<std::uint8_t> bits;  // index i*M + m
};

struct CodewordSampling {
  enum class Mode { enumerate, sample } mode = Mode::enumerate;
  std::size_t count = 0;  // samples when mode == sample
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxEnumerationDimension = 20;

std::size_t lifted_code_dimension(const LiftedParityCheck& l);

// enumerate: all 2^dim codewords, zero first (Gray-code order over the
// kernel basis). Throws PreconditionError above kMaxEnumerationDimension.
// sample: `count` uniform random kernel combinations.
std::vector<CoverCodeword> cover_codewords(const LiftedParityCheck& l, const CodewordSampling& how);

bool satisfies_lifted_checks(const LiftedParityCheck& l, const CoverCodeword& c);

// omega_i = unscaled_i / degree, kept as an exact pair.
struct PseudoCodeword {
  std::size_t degree = 1;
  std::vector<std::uint64_t> unscaled;
};

PseudoCodeword pseudo_codeword(const CoverCodeword& c, std::size_t num_bits);

// One step of a lifted closed walk: lifted edge (edge, copy) traversed from
// (from_vertex, from_sheet) to (to_vertex, to_sheet).
struct LiftedStep {
  std::size_t edge;
  std::size_t copy;
  std::size_t from_vertex, from_sheet;
  std::size_t to_vertex, to_sheet;
};

struct CycleLift {
  CoverSpec spec;  // cover of the Tanner graph of incidence_matrix(g)
  std::vector<LiftedStep> cycle;
};

// Builds a finite cover of the normal graph and a simple cycle in it that
// projects step-by-step onto `walk`. Precondition: `walk` is a closed
// backtrackless tailless walk on `d` (PreconditionError otherwise).
CycleLift lift_cycle(const NormalGraph& g, const DirectedEdgeSet& d, const CycleWord& walk);

// Lifted normal-graph edge (i, copy) joins (lo, a) and (hi, b) for
// lo < hi the endpoints of edge i, where pi_{lo,i}(a) = copy = pi_{hi,i}(b).
std::pair<std::size_t, std::size_t> lifted_edge_sheets(const NormalGraph& g, const CoverSpec& spec,
                                                       std::size_t edge, std::size_t copy);

struct LiftAudit {
  bool edges_exist = false;    // every step is an edge of the cover
  bool closed = false;
  bool simple = false;         // distinct lifted edges, every lifted vertex met <= 2 times
  bool projects = false;       // step-by-step projection equals the walk
  bool is_codeword = false;    // characteristic vector satisfies the lifted checks
  bool usage_matches = false;  // unscaled pseudo-codeword == edge usage of the walk
  bool ok() const { return edges_exist && closed && simple && projects && is_codeword && usage_matches; }
};

LiftAudit audit_lift(const NormalGraph& g, const DirectedEdgeSet& d, const CycleWord& walk,
                     const CycleLift& lift);

// Characteristic vector of the lifted cycle as a cover codeword.
CoverCodeword lift_codeword(const NormalGraph& g, const CycleLift& lift);

}  // namespace zetacone
