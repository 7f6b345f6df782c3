#include "zetacone/verify.hpp"

#include <set>

#include "zetacone/cycles.hpp"
#include "zetacone/zeta.hpp"

namespace zetacone {

EquivalenceReport verify_equivalence(const ParityCheckMatrix& h, std::uint32_t degree_bound,
                                     NormalGraphOptions options) {
  const NormalGraph g = build_normal_graph(h, options);
  EquivalenceReport r;
  r.degree_bound = degree_bound;
  const ZetaInverse z = zeta_inverse(g);
  r.zeta_inverse = z.poly;
  const ZetaSeries s = zeta_series(z, degree_bound);
  r.zeta_support_count = s.series.polynomial().num_terms();
  r.newton = check_newton_equivalence(cone_system(h), h, s);

  const auto oracle = cycle_factorization_counts(g, degree_bound);
  r.oracle_support_count = oracle.size();
  // Walk both sorted term lists in step and record every exponent where the
  // coefficients disagree, including terms present on one side only.
  const auto& series_terms = s.series.polynomial().terms();
  auto a = series_terms.begin();
  auto b = oracle.begin();
  const GrlexLess less;
  while (a != series_terms.end() || b != oracle.end()) {
    if (b == oracle.end() || (a != series_terms.end() && less(a->first, b->first))) {
      r.oracle_mismatches.push_back(a->first);
      ++a;
    } else if (a == series_terms.end() || less(b->first, a->first)) {
      r.oracle_mismatches.push_back(b->first);
      ++b;
    } else {
      if (a->second != b->second) r.oracle_mismatches.push_back(a->first);
      ++a, ++b;
    }
  }
  return r;
}

}  // namespace zetacone
