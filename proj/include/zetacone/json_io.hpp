#pragma once

// JSON forms of the library's values. Check and bit labels are 1-based on the
// wire, 0-based in memory.

#include <json.hpp>

#include "zetacone/cone.hpp"
#include "zetacone/covers.hpp"
#include "zetacone/cycles.hpp"
#include "zetacone/polyring.hpp"
#include "zetacone/zeta.hpp"

namespace zetacone::json_io {

using nlohmann::json;

// [{"exp": [p1..pn], "coeff": "decimal"}...] in ascending grlex order.
json to_json(const SparsePolynomial& p);
// Throws ParseError on a malformed document.
SparsePolynomial polynomial_from_json(const json& j, std::size_t num_vars);

// {"n", "zeta_inverse", "series": {"max_degree", "terms"}, "support"}
json zeta_report(const ZetaInverse& z, const ZetaSeries& s, const std::vector<ExponentVector>& support);

// {"M": m, "perms": {"j,i": [one-based images]}}
json to_json(const CoverSpec& spec);
CoverSpec cover_spec_from_json(const json& j);

// [{"rep": [half-edge ids, 1-based], "length": L, "monomial": [p]}]
json to_json(const std::vector<CycleClass>& classes);

// {"degree_bound", "support_count", "lattice_count", "missing_from_support", "outside_cone"}
json to_json(const NewtonReport& r);

json to_json(const ExponentVector& e);

}  // namespace zetacone::json_io
