#include "zetacone/json_io.hpp"

#include <charconv>
#include <limits>

#include "zetacone/error.hpp"

namespace zetacone::json_io {

json to_json(const ExponentVector& e) {
  json a = json::array();
  for (auto v : e.values()) a.push_back(v);
  return a;
}

json to_json(const SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", to_json(e)}, {"coeff", c.get_str()}});
  return terms;
}

SparsePolynomial polynomial_from_json(const json& j, std::size_t num_vars) {
  if (!j.is_array()) throw ParseError(0, "polynomial must be a JSON array of terms");
  SparsePolynomial p(num_vars);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
      throw ParseError(0, "term must have 'exp' and 'coeff'");
    const auto& exp = term.at("exp");
    if (!exp.is_array() || exp.size() != num_vars)
      throw ParseError(0, "term exponent must have " + std::to_string(num_vars) + " entries");
    ExponentVector e(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (!exp[i].is_number_unsigned() || exp[i].get<std::uint64_t>() > std::numeric_limits<std::uint16_t>::max())
        throw ParseError(0, "exponents must be integers in 0..65535");
      e.set(i, exp[i].get<std::uint16_t>());
    }
    if (!term.at("coeff").is_string()) throw ParseError(0, "coefficient must be a decimal string");
    Integer c;
    if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0)
      throw ParseError(0, "bad coefficient '" + term.at("coeff").get<std::string>() + "'");
    if (p.coefficient(e) != 0) throw ParseError(0, "repeated exponent " + e.to_string());
    p.add_term(e, c);
  }
  return p;
}

json zeta_report(const ZetaInverse& z, const ZetaSeries& s, const std::vector<ExponentVector>& support) {
  json sup = json::array();
  for (const auto& e : support) sup.push_back(to_json(e));
  return {{"n", z.poly.num_vars()},
          {"zeta_inverse", to_json(z.poly)},
          {"series", {{"max_degree", s.max_total_degree()}, {"terms", to_json(s.series.polynomial())}}},
          {"support", sup}};
}

json to_json(const CoverSpec& spec) {
  json perms = json::object();
  for (const auto& [key, p] : spec.perms) {
    json images = json::array();
    for (auto v : p) images.push_back(v + 1);
    perms[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = images;
  }
  return {{"M", spec.degree}, {"perms", perms}};
}

CoverSpec cover_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("M") || !j.contains("perms"))
    throw ParseError(0, "cover spec needs 'M' and 'perms'");
  if (!j.at("M").is_number_unsigned() || j.at("M").get<std::size_t>() == 0)
    throw ParseError(0, "'M' must be a positive integer");
  CoverSpec spec;
  spec.degree = j.at("M").get<std::size_t>();
  for (const auto& [key, images] : j.at("perms").items()) {
    const auto comma = key.find(',');
    std::size_t jj = 0, ii = 0;
    auto parse = [&](std::string_view s, std::size_t& out) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc{} && ptr == s.data() + s.size() && out >= 1;
    };
    if (comma == std::string::npos || !parse(std::string_view(key).substr(0, comma), jj) ||
        !parse(std::string_view(key).substr(comma + 1), ii))
      throw ParseError(0, "permutation key '" + key + "' must be 'j,i' with 1-based indices");
    if (!images.is_array()) throw ParseError(0, "permutation '" + key + "' must be an array");
    std::vector<std::size_t> p;
    for (const auto& v : images) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
        throw ParseError(0, "permutation '" + key + "' must hold 1-based images");
      p.push_back(v.get<std::size_t>() - 1);
    }
    spec.perms[{jj - 1, ii - 1}] = std::move(p);
  }
  return spec;
}

json to_json(const std::vector<CycleClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    json rep = json::array();
    for (auto k : c.representative.steps) rep.push_back(k + 1);
    out.push_back({{"rep", rep}, {"length", c.length()}, {"monomial", to_json(c.monomial)}});
  }
  return out;
}

json to_json(const NewtonReport& r) {
  json missing = json::array(), outside = json::array();
  for (const auto& e : r.missing_from_support) missing.push_back(to_json(e));
  for (const auto& e : r.outside_cone) outside.push_back(to_json(e));
  json out = {{"degree_bound", r.degree_bound},
              {"support_count", r.support_count},
              {"lattice_count", r.lattice_count},
              {"missing_from_support", missing},
              {"outside_cone", outside}};
  if (r.max_exponent) out["max_exponent"] = *r.max_exponent;
  return out;
}

}  // namespace zetacone::json_io
