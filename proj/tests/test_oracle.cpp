#include "abext/io.hpp"
#include "abext/oracle.hpp"
#include "abext/theorems.hpp"

#include <doctest.h>

using namespace abext;
using namespace abext::oracle;

namespace {

FgGroup G(const char *expr) { return parse_group_expression(expr); }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumerate_classes examples") {
  CHECK(enumerate_classes(G("Z/2"), G("Z/2")).size() == 2);
  CHECK(enumerate_classes(G("Z/2"), G("Z/3")).size() == 1);
  CHECK(enumerate_classes(FgGroup::trivial(), G("Z/4")).size() == 1);
  CHECK_THROWS_AS(enumerate_classes(G("Z/16"), G("Z/2")), ResourceLimit);
  CHECK_THROWS_AS(enumerate_classes(G("Z"), G("Z/2")), UnsupportedInput);
  Caps big{16, 16, 256};
  CHECK(enumerate_classes(G("Z/16"), G("Z/2"), big).size() == 2);
}

TEST_CASE("representatives are valid and minimal") {
  for (const auto &cls : enumerate_classes(G("Z/2 + Z/2"), G("Z/4"))) {
    CHECK(cls.representative.is_valid());
  }
  auto classes = enumerate_classes(G("Z/2"), G("Z/2"));
  // The zero table represents the split class.
  CHECK(std::all_of(classes[0].representative.table.begin(),
                    classes[0].representative.table.end(),
                    [](std::int64_t v) { return v == 0; }));
}

TEST_CASE("cocycle_to_extension examples") {
  auto classes = enumerate_classes(G("Z/2"), G("Z/2"));
  CHECK(splits(cocycle_to_extension(classes[0].representative)));
  CHECK(cocycle_to_extension(classes[1].representative).B() == G("Z/4"));
  for (const auto &cls : enumerate_classes(G("Z/4"), G("Z/3")))
    CHECK(splits(cocycle_to_extension(cls.representative)));
}

TEST_CASE("class_of and add are consistent") {
  ExtensionCensus census(G("Z/2 + Z/2"), G("Z/2"));
  CHECK(census.class_count() == 4);
  for (const auto &x : census.classes()) {
    CHECK(census.class_of(x.representative) == x.index);
    for (const auto &y : census.classes())
      CHECK(census.class_of(x.representative + y.representative) == census.add(x.index, y.index));
  }
}

TEST_CASE("t-classes and equivalence") {
  CHECK(oracle_t_classes(G("Z/2"), G("Z/4")).size() == 2);
  auto classes = enumerate_classes(G("Z/4"), G("Z/2"));
  Extension e = cocycle_to_extension(classes[1].representative);
  CHECK(oracle_equivalent(e, e));
  CHECK_FALSE(oracle_equivalent(e, cocycle_to_extension(classes[0].representative)));
}

TEST_CASE("oracle agrees with Ext on the small corpus") {
  auto corpus = small_finite_corpus();
  for (const auto &c : corpus)
    for (const auto &a : corpus) {
      CAPTURE(to_string(c));
      CAPTURE(to_string(a));
      CHECK(Integer(ExtensionCensus(c, a).class_count()) == ext_group(c, a).cardinality());
    }
}

}
