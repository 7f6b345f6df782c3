#include <doctest.h>

#include "../support/random_codes.hpp"
#include "zetacone/error.hpp"
#include "zetacone/json_io.hpp"

using namespace zetacone;
using json_io::json;

TEST_CASE("polynomial JSON round trip") {
  const auto z = zeta_inverse(build_normal_graph(testsupport::code_b()));
  const auto j = json_io::to_json(z.poly);
  CHECK(j.size() == 13);
  CHECK(j[0]["coeff"] == "1");
  CHECK(json_io::polynomial_from_json(j, 7) == z.poly);
  CHECK_THROWS_AS(json_io::polynomial_from_json(json::parse(R"([{"exp":[1],"coeff":"2"}])"), 7), ParseError);
  CHECK_THROWS_AS(json_io::polynomial_from_json(json::parse(R"([{"exp":[1],"coeff":2}])"), 1), ParseError);
}

TEST_CASE("cover spec JSON round trip and errors") {
  const auto s = random_cover_spec(testsupport::code_b(), 3, 8);
  const auto j = json_io::to_json(s);
  CHECK(j["M"] == 3);
  CHECK(j["perms"].contains("1,1"));
  CHECK(json_io::cover_spec_from_json(j) == s);
  CHECK_THROWS_AS(json_io::cover_spec_from_json(json::parse(R"({"M":2})")), ParseError);
  CHECK_THROWS_AS(json_io::cover_spec_from_json(json::parse(R"({"M":2,"perms":{"0,1":[1,2]}})")), ParseError);
  CHECK_THROWS_AS(json_io::cover_spec_from_json(json::parse(R"({"M":2,"perms":{"1,1":[0,1]}})")), ParseError);
}

TEST_CASE("zeta report layout") {
  const auto z = zeta_inverse(build_normal_graph(testsupport::code_b()));
  const auto s = zeta_series(z, 6);
  const auto j = json_io::zeta_report(z, s, support_exponents(s));
  CHECK(j["n"] == 7);
  CHECK(j["series"]["max_degree"] == 6);
  CHECK(j["support"].size() == j["series"]["terms"].size());
}
