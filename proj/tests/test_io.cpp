#include "abext/io.hpp"
#include "abext/sampling.hpp"

#include <doctest.h>

using namespace abext;

TEST_SUITE("io") {

TEST_CASE("group expression examples") {
  CHECK(parse_group_expression("Z^2 + Z/4 + Z/6") == FgGroup(2, {2, 12}));
  CHECK(parse_group_expression("Z") == FgGroup(1, {}));
  CHECK(parse_group_expression("  Z/2+Z/3 ") == FgGroup(0, {6}));
  CHECK(parse_group_expression("Z^0") == FgGroup::trivial());
  CHECK(parse_group_expression("0") == FgGroup::trivial());
  CHECK(parse_group_expression("Z / 100000000000000000000") ==
        FgGroup(0, {Integer("100000000000000000000")}));
}

TEST_CASE("group expression errors") {
  CHECK_THROWS_AS(parse_group_expression("Z/1"), InvalidInput);
  CHECK_THROWS_AS(parse_group_expression("Z/0"), InvalidInput);
  try {
    parse_group_expression("Z + Q");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 4);
  }
  try {
    parse_group_expression("Z^");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_group_expression(""), ParseError);
  CHECK_THROWS_AS(parse_group_expression("Z Z"), ParseError);
  CHECK_THROWS_AS(parse_group_expression("0 + Z"), ParseError);
}

TEST_CASE("rendering round-trips through the parser") {
  Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    FgGroup g = random_group(rng);
    CHECK(parse_group_expression(to_string(g)) == g);
    CHECK(group_from_json(to_json(g)) == g);
    CHECK(group_from_json(Json(to_string(g))) == g);
  }
}

TEST_CASE("integers beyond 64 bits travel as strings") {
  Integer big("-123456789012345678901234567890");
  Json j = integer_to_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(j) == big);
  CHECK(integer_to_json(Integer(42)).is_number_integer());
  CHECK(integer_from_json(Json("17")) == 17);
  CHECK_THROWS_AS(integer_from_json(Json("1x")), InvalidInput);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), InvalidInput);
}

TEST_CASE("matrix JSON form") {
  IntMatrix m(2, 3);
  m << 1, -2, 3, 4, 5, Integer("99999999999999999999");
  Json j = to_json(m);
  CHECK(j.dump() ==
        R"({"rows":2,"cols":3,"entries":[[1,-2,3],[4,5,"99999999999999999999"]]})");
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_from_json(to_json(IntMatrix(0, 2))).cols() == 2);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[[1]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1})")), InvalidInput);
}

TEST_CASE("group, morphism and extension JSON forms") {
  FgGroup g(1, {2, 4});
  CHECK(to_json(g).dump() == R"({"free_rank":1,"invariant_factors":[2,4]})");
  Rng rng(52);
  for (int t = 0; t < 40; ++t) {
    FgGroup c = random_group(rng), a = random_group(rng);
    Morphism f = random_morphism(rng, c, a);
    CHECK(morphism_from_json(to_json(f)) == f);
    Extension e = random_realization(rng, random_element(rng, ext_group(c, a)));
    Extension back = extension_from_json(to_json(e));
    CHECK(back.phi() == e.phi());
    CHECK(back.psi() == e.psi());
    ExtElement x = random_element(rng, ext_group(c, a));
    CHECK(ext_element_from_json(to_json(x)) == x);
  }
  Json f = Json::parse(R"({"domain":"Z/2","codomain":"Z/4","matrix":[[2]]})");
  CHECK(morphism_from_json(f).matrix()(0, 0) == 2);
  Json bad = Json::parse(R"({"domain":"Z/2","codomain":"Z/4","matrix":[[1]]})");
  CHECK_THROWS_AS(morphism_from_json(bad), InvalidInput);
}

TEST_CASE("extension JSON is validated") {
  Json e = Json::parse(R"({"A":"Z","B":"Z","C":"Z/4",
    "phi":{"domain":"Z","codomain":"Z","matrix":[[2]]},
    "psi":{"domain":"Z","codomain":"Z/4","matrix":[[1]]}})");
  CHECK_THROWS_AS(extension_from_json(e), ExactnessViolation);
  Json wrong = Json::parse(R"({"A":"Z/2","B":"Z","C":"Z/2",
    "phi":{"domain":"Z","codomain":"Z","matrix":[[2]]},
    "psi":{"domain":"Z","codomain":"Z/2","matrix":[[1]]}})");
  CHECK_THROWS_WITH_AS(extension_from_json(wrong), doctest::Contains("stated A"), InvalidInput);
}

TEST_CASE("Ext group JSON form") {
  ExtGroup g = ext_group(parse_group_expression("Z/4"), parse_group_expression("Z/6 + Z"));
  CHECK(to_json(g).dump() ==
        R"({"structure":{"free_rank":0,"invariant_factors":[2,4]},)"
        R"("components":[{"c_index":0,"a_target":"torsion:0","order":2},)"
        R"({"c_index":0,"a_target":"free:1","order":4}]})");
  ExtTSubgroup t(g);
  CHECK(to_json(t).dump() ==
        R"({"structure":{"free_rank":0,"invariant_factors":[2]},)"
        R"("components":[{"c_index":0,"a_target":"torsion:0","order":2}]})");
}

}
