#include "abext/extension.hpp"
#include "abext/io.hpp"
#include "abext/oracle.hpp"
#include "abext/sampling.hpp"

#include <doctest.h>

using namespace abext;

namespace {

FgGroup G(const char *expr) { return parse_group_expression(expr); }

Morphism M(const char *dom, const char *cod, std::initializer_list<long> column_major) {
  FgGroup d = G(dom), c = G(cod);
  IntMatrix m(c.generator_count(), d.generator_count());
  auto it = column_major.begin();
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      m(i, j) = *it++;
  return Morphism(d, c, m);
}

// 0 -> Z/2 -> Z/4 -> Z/2 -> 0
Extension z4_extension() { return Extension(M("Z/2", "Z/4", {2}), M("Z/4", "Z/2", {1})); }

// 0 -> Z -(x2)-> Z -> Z/2 -> 0
Extension doubling_extension() { return Extension(M("Z", "Z", {2}), M("Z", "Z/2", {1})); }

} // namespace

TEST_SUITE("extensions") {

TEST_CASE("make_extension accepts exact data") {
  auto s = direct_sum(G("Z/3"), G("Z + Z/2"));
  CHECK_NOTHROW(make_extension(s.inject_first, s.project_second));
  CHECK_NOTHROW(doubling_extension());
}

TEST_CASE("make_extension names the failing condition") {
  try {
    make_extension(M("Z", "Z", {2}), M("Z", "Z/4", {1}));
    FAIL("expected an exactness violation");
  } catch (const ExactnessViolation &e) {
    CHECK(std::string(e.what()).find("image of phi differs from kernel of psi") !=
          std::string::npos);
  }
  CHECK_THROWS_WITH_AS(make_extension(M("Z/2", "Z/2", {0}), M("Z/2", "Z/2", {1})),
                       doctest::Contains("phi is not injective"), ExactnessViolation);
  CHECK_THROWS_WITH_AS(make_extension(M("Z", "Z", {1}), M("Z", "Z/2", {0})),
                       doctest::Contains("psi is not surjective"), ExactnessViolation);
  CHECK_THROWS_AS(make_extension(M("Z", "Z", {1}), M("Z/2", "Z/2", {1})), InvalidInput);
}

TEST_CASE("is_t_extension examples") {
  CHECK(is_t_extension(split_extension(G("Z/6 + Z"), G("Z/4 + Z^2"))));
  CHECK(is_t_extension(z4_extension()));
  CHECK_FALSE(is_t_extension(doubling_extension()));
}

TEST_CASE("pushout examples") {
  Extension e = z4_extension();
  CHECK(are_equivalent(pushout(e, Morphism::identity(e.A())), e));
  CHECK(splits(pushout(e, Morphism::zero(e.A(), G("Z/6")))));
  Extension p = pushout(e, M("Z/2", "Z/4", {2}));
  CHECK(splits(p));
  CHECK(classify(p).is_zero());
  CHECK_THROWS_AS(pushout(e, Morphism::identity(G("Z/3"))), InvalidInput);
}

TEST_CASE("pullback examples") {
  Extension e = z4_extension();
  CHECK(are_equivalent(pullback(e, Morphism::identity(e.C())), e));
  CHECK(splits(pullback(e, Morphism::zero(G("Z + Z/3"), e.C()))));

  // gamma : Z/4 -> Z/2, the projection. Compare with the cocycle oracle.
  Morphism gamma = M("Z/4", "Z/2", {1});
  Extension q = pullback(e, gamma);
  ExtElement x = classify(q);
  CHECK(x == induced_pullback(gamma, e.A())(classify(e)));
  CHECK(x.is_zero());
  oracle::ExtensionCensus census(q.C(), q.A());
  bool matched = false;
  for (const auto &cls : census.classes()) {
    Extension r = oracle::cocycle_to_extension(cls.representative);
    if (oracle::oracle_equivalent(r, q)) {
      CHECK(classify(r) == x);
      matched = true;
    }
  }
  CHECK(matched);
}

TEST_CASE("direct_sum_ext examples") {
  Extension s1 = split_extension(G("Z/2"), G("Z/3"));
  Extension s2 = split_extension(G("Z"), G("Z/2"));
  CHECK(splits(direct_sum_ext(s1, s2)));
  CHECK(is_t_extension(direct_sum_ext(z4_extension(), z4_extension())));
  CHECK_FALSE(is_t_extension(direct_sum_ext(z4_extension(), doubling_extension())));
}

TEST_CASE("baer_sum examples") {
  Extension e = z4_extension();
  Extension split = split_extension(e.C(), e.A());
  CHECK(are_equivalent(baer_sum(e, split), e));
  Extension twice = baer_sum(e, e);
  CHECK(splits(twice));
  CHECK(twice.B() == G("Z/2 + Z/2"));
  CHECK(is_t_extension(twice));
  CHECK_THROWS_AS(baer_sum(e, doubling_extension()), InvalidInput);
  CHECK_THROWS_AS(are_equivalent(e, doubling_extension()), InvalidInput);
}

TEST_CASE("classify examples") {
  CHECK(classify(split_extension(G("Z/4 + Z"), G("Z/6"))).is_zero());
  ExtElement x = classify(z4_extension());
  CHECK(x.parent().structure() == G("Z/2"));
  CHECK(x.coords()(0) == 1);
  ExtElement y = classify(doubling_extension());
  CHECK(y.parent().structure() == G("Z/2"));
  CHECK(y.coords()(0) == 1);
}

TEST_CASE("realize examples") {
  Extension s = realize(ExtElement::zero(ext_group(G("Z/4"), G("Z + Z/2"))));
  CHECK(splits(s));
  ExtGroup g = ext_group(G("Z/2"), G("Z/2"));
  CHECK(realize(ExtElement::unit(g, 0)).B() == G("Z/4"));
  Extension z = realize(ExtElement::unit(ext_group(G("Z/2"), G("Z")), 0));
  CHECK(z.B() == G("Z"));
  CHECK(abs_of(Integer(z.phi().matrix()(0, 0))) == 2);
}

TEST_CASE("are_equivalent examples") {
  Extension e = z4_extension();
  CHECK(are_equivalent(e, e));
  CHECK_FALSE(are_equivalent(e, split_extension(e.C(), e.A())));
  // Distinct cocycles in one class: add a coboundary to the representative.
  oracle::ExtensionCensus census(G("Z/2"), G("Z/4"));
  for (const auto &cls : census.classes()) {
    oracle::Cocycle f = cls.representative;
    oracle::Cocycle g = f;
    oracle::FiniteGroup cg(f.C), ag(f.A);
    // delta h for h(c) = c-th element of A: h(x) + h(y) - h(x + y).
    for (std::int64_t x = 0; x < cg.size(); ++x)
      for (std::int64_t y = 0; y < cg.size(); ++y) {
        auto h = [&](std::int64_t c) { return c == 0 ? 0 : ag.generator(0); };
        auto d = ag.add(ag.add(h(x), h(y)), ag.negate(h(cg.add(x, y))));
        g.table[static_cast<std::size_t>(x * cg.size() + y)] =
            ag.add(g.table[static_cast<std::size_t>(x * cg.size() + y)], d);
      }
    REQUIRE(g.is_valid());
    CHECK(g.table != f.table);
    Extension e1 = oracle::cocycle_to_extension(f);
    Extension e2 = oracle::cocycle_to_extension(g);
    CHECK(are_equivalent(e1, e2));
    CHECK(oracle::oracle_equivalent(e1, e2));
  }
}

TEST_CASE("splits examples") {
  auto s = direct_sum(G("Z/2"), G("Z/4"));
  Extension split(s.inject_first, s.project_second);
  auto rho = find_retraction(split);
  REQUIRE(rho);
  CHECK(compose(*rho, split.phi()) == Morphism::identity(split.A()));
  CHECK_FALSE(splits(z4_extension()));
  CHECK_FALSE(find_retraction(z4_extension()));
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    FgGroup c = random_finite_group(rng, 12);
    FgGroup a = FgGroup::free(uniform(rng, 1, 2));
    Extension e = random_realization(rng, ExtElement::zero(ext_group(c, a)));
    REQUIRE(is_t_extension(e));
    CHECK(splits(e));
  }
}

TEST_CASE("is_pure_extension examples") {
  CHECK(is_pure_extension(split_extension(G("Z/2"), G("Z + Z/3"))));
  CHECK_FALSE(is_pure_extension(z4_extension()));
  CHECK_FALSE(is_pure_extension(doubling_extension()));
}

TEST_CASE("classification is sound and lift-independent") {
  Rng rng(22);
  for (int t = 0; t < 80; ++t) {
    FgGroup c = random_group(rng), a = random_group(rng);
    ExtGroup g = ext_group(c, a);
    ExtElement x = random_element(rng, g);
    CHECK(classify(realize(x)) == x);
    CHECK(classify(random_realization(rng, x)) == x);
  }
}

TEST_CASE("classify commutes with pushout and pullback") {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    FgGroup c = random_group(rng), a = random_group(rng);
    Extension e = random_realization(rng, random_element(rng, ext_group(c, a)));
    Morphism mu = random_morphism(rng, a, random_group(rng));
    Morphism gamma = random_morphism(rng, random_group(rng), c);
    CHECK(classify(pushout(e, mu)) == induced_pushforward(mu, c)(classify(e)));
    CHECK(classify(pullback(e, gamma)) == induced_pullback(gamma, a)(classify(e)));
  }
}

TEST_CASE("membership in Ext_t decides the t-extension property") {
  Rng rng(24);
  int t_count = 0, other = 0;
  for (int t = 0; t < 120; ++t) {
    FgGroup c = random_group(rng), a = random_group(rng);
    ExtGroup g = ext_group(c, a);
    ExtElement x = random_element(rng, g);
    Extension e = random_realization(rng, x);
    const bool is_t = is_t_extension(e);
    (is_t ? t_count : other)++;
    CHECK(is_t == ext_t_subgroup(c, a).contains(x));
  }
  CHECK(t_count > 0);
  CHECK(other > 0);
}

TEST_CASE("both Baer sum orders agree") {
  Rng rng(25);
  for (int t = 0; t < 40; ++t) {
    FgGroup c = random_group(rng), a = random_group(rng);
    ExtGroup g = ext_group(c, a);
    Extension e1 = random_realization(rng, random_element(rng, g));
    Extension e2 = random_realization(rng, random_element(rng, g));
    CHECK(are_equivalent(baer_sum(e1, e2), baer_sum_pushout_first(e1, e2)));
  }
}

}
