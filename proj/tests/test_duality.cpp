#include "abext/duality.hpp"
#include "abext/io.hpp"
#include "abext/sampling.hpp"
#include "abext/theorems.hpp"

#include <doctest.h>

using namespace abext;

namespace {

FgGroup G(const char *expr) { return parse_group_expression(expr); }

Morphism M(const char *dom, const char *cod, long entry) {
  IntMatrix m(1, 1);
  m << entry;
  return Morphism(G(dom), G(cod), m);
}

} // namespace

TEST_SUITE("duality") {

TEST_CASE("cyclic fractions are reduced modulo 1") {
  CyclicFraction a(3, 4), b(3, 4);
  CHECK(a + b == CyclicFraction(1, 2));
  CHECK((a + b).denominator() == 2);
  CHECK(CyclicFraction(8, 4).is_zero());
  CHECK(CyclicFraction(-1, 3) == CyclicFraction(2, 3));
  CHECK(to_string(CyclicFraction(6, 8)) == "3/4");
  CHECK(to_string(CyclicFraction(0, 5)) == "0");
  CHECK(Integer(4) * a == CyclicFraction(0, 1));
  CHECK_THROWS_AS(CyclicFraction(1, 0), InvalidInput);
}

TEST_CASE("dual_group examples") {
  CHECK(dual_group(FgGroup::trivial()).carrier().is_trivial());
  for (int n = 2; n <= 12; ++n) {
    DualGroup d = dual_group(FgGroup::cyclic(n));
    CHECK(d.carrier() == FgGroup::cyclic(n));
    CHECK(d.is_nondegenerate());
    IntVector x(1), chi(1);
    x << 1;
    chi << 1;
    CHECK(d.pair(x, chi) == CyclicFraction(1, n));
  }
  DualGroup d = dual_group(G("Z/2 + Z/4"));
  CHECK(d.carrier() == G("Z/2 + Z/4"));
  CHECK(d.is_nondegenerate());
  CHECK_THROWS_AS(dual_group(G("Z + Z/2")), UnsupportedInput);
}

TEST_CASE("dual_morphism examples") {
  Morphism id = Morphism::identity(G("Z/2 + Z/6"));
  CHECK(dual_morphism(id) == id);
  Morphism two = Morphism::scalar(G("Z/4"), 2);
  CHECK(dual_morphism(two) == two);
  Morphism inc = M("Z/2", "Z/4", 2);
  Morphism d = dual_morphism(inc);
  CHECK(d == M("Z/4", "Z/2", 1));
  CHECK(is_surjective(d));
  CHECK(is_adjoint(inc, d));
  CHECK_THROWS_AS(dual_morphism(Morphism::identity(G("Z"))), UnsupportedInput);
}

TEST_CASE("duality is contravariant and adjoint on random finite maps") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    FgGroup g = random_finite_group(rng, 24), h = random_finite_group(rng, 24),
            k = random_finite_group(rng, 24);
    Morphism f = random_morphism(rng, g, h);
    Morphism u = random_morphism(rng, h, k);
    CHECK(dual_morphism(compose(u, f)) == compose(dual_morphism(f), dual_morphism(u)));
    CHECK(is_adjoint(f, dual_morphism(f)));
  }
}

TEST_CASE("evaluation is a natural isomorphism") {
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    FgGroup g = random_finite_group(rng, 32), h = random_finite_group(rng, 32);
    Morphism f = random_morphism(rng, g, h);
    Morphism ev_g = evaluation_map(g), ev_h = evaluation_map(h);
    CHECK(is_isomorphism(ev_g));
    CHECK(compose(ev_h, f) == compose(dual_morphism(dual_morphism(f)), ev_g));
  }
}

TEST_CASE("dual_extension examples") {
  Extension s = split_extension(G("Z/2"), G("Z/3"));
  CHECK(splits(dual_extension(s)));
  Extension e(M("Z/2", "Z/4", 2), M("Z/4", "Z/2", 1));
  Extension d = dual_extension(e);
  CHECK(d.A() == G("Z/2"));
  CHECK(d.C() == G("Z/2"));
  CHECK(d.B() == G("Z/4"));
  CHECK(double_dual_matches(e));
  CHECK_THROWS_AS(dual_extension(split_extension(G("Z/2"), G("Z"))), UnsupportedInput);
}

TEST_CASE("duality transport on every small extension") {
  auto corpus = small_finite_corpus();
  int checked = 0;
  for (const auto &c : corpus)
    for (const auto &a : corpus) {
      if (*order(c) * *order(a) > 64)
        continue;
      for (const auto &x : all_elements(ext_group(c, a))) {
        Json input = {{"extension", to_json(realize(x))}};
        auto why = replay_case("duality_transport", input);
        CHECK_MESSAGE(!why, (why ? *why : std::string()));
        ++checked;
      }
    }
  CHECK(checked > 100);
}

}
