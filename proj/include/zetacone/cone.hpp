#pragma once

// The fundamental cone K(H): membership, bounded lattice points with the
// parity condition, and the lattice-point form of the Newton polyhedron
// equality for cycle codes.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetacone/codegraph.hpp"
#include "zetacone/polyring.hpp"
#include "zetacone/zeta.hpp"

namespace zetacone {

using Rational = mpq_class;

struct ConeInequality {
  enum class Kind { nonnegativity, check } kind;
  std::size_t check;        // j, for Kind::check
  std::size_t distinguished;  // i
  std::vector<std::int32_t> coeffs;  // a with a . w >= 0

  // "-w1+w2+w3 >= 0"
  std::string to_string() const;
};

class ConeSystem {
 public:
  explicit ConeSystem(std::size_t n) : n_(n) {}

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<ConeInequality>& inequalities() const noexcept { return rows_; }
  void add(ConeInequality row);

  // Rows zero-padded to a multiple of 8 for the evaluation kernel.
  std::size_t stride() const noexcept { return (n_ + 7) / 8 * 8; }
  const std::vector<std::int32_t>& packed() const noexcept { return packed_; }

 private:
  std::size_t n_;
  std::vector<ConeInequality> rows_;
  std::vector<std::int32_t> packed_;
};

// n nonnegativity rows (bit order), then for each check j and each i in I_j the
// row sum_{i' in I_j, i' != i} w_i' - w_i >= 0.
ConeSystem cone_system(const ParityCheckMatrix& h);

struct Membership {
  bool inside = true;
  std::optional<std::size_t> violated;  // index of the first violated row
  Rational value;                       // that row's value (negative)
};

Membership cone_contains(const ConeSystem& k, const std::vector<Rational>& w);
Membership cone_contains(const ConeSystem& k, const std::vector<std::int64_t>& w);

// sum_i h_ji p_i even for every check j.
bool parity_ok(const ParityCheckMatrix& h, const ExponentVector& p);

struct IntegerConePoint {
  ExponentVector p;
  bool in_cone = false;
  bool parity_ok = false;
  bool pseudo_codeword() const noexcept { return in_cone && parity_ok; }
};

struct LatticeBounds {
  std::uint32_t max_total_degree = 0;
  // Optional per-coordinate cap (the box {p_i <= max_exponent}).
  std::optional<std::uint16_t> max_exponent;
};

inline constexpr std::uint64_t kMaxLatticePoints = 10'000'000;

// C(D + n, n), saturating at UINT64_MAX.
std::uint64_t simplex_point_count(std::size_t n, std::uint32_t max_degree);

// Visits every nonnegative integer vector within the bounds in ascending
// grlex order. Throws PreconditionError if the simplex has more than
// kMaxLatticePoints points.
void for_each_integer_point(const ConeSystem& k, const ParityCheckMatrix& h, const LatticeBounds& bounds,
                            const std::function<void(const IntegerConePoint&)>& visit);

std::vector<IntegerConePoint> integer_points(const ConeSystem& k, const ParityCheckMatrix& h,
                                             const LatticeBounds& bounds);

struct NewtonReport {
  std::uint32_t degree_bound = 0;
  std::optional<std::uint16_t> max_exponent;
  std::size_t support_count = 0;
  std::size_t lattice_count = 0;
  std::vector<ExponentVector> missing_from_support;  // lattice points not in the support
  std::vector<ExponentVector> outside_cone;          // support exponents failing cone or parity
  bool passed() const noexcept { return missing_from_support.empty() && outside_cone.empty(); }
};

// Both inclusions between the series support and the in-cone, even-parity
// lattice points, at total degree <= the series bound (and inside the box
// when max_exponent is set).
NewtonReport check_newton_equivalence(const ConeSystem& k, const ParityCheckMatrix& h, const ZetaSeries& s,
                                      std::optional<std::uint16_t> max_exponent = std::nullopt);

}  // namespace zetacone
