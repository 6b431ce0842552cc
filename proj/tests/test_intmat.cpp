#include "abext/intmat.hpp"

#include <doctest.h>

#include <random>

using namespace abext;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto &row : rows) {
    Index j = 0;
    for (long v : row)
      m(i, j++) = v;
    ++i;
  }
  return m;
}

template <typename Scalar>
void check_snf(const Mat<Scalar> &a, const SnfDecomposition<Scalar> &s) {
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.U * s.U_inv == Mat<Scalar>::Identity(a.rows(), a.rows()));
  CHECK(s.V * s.V_inv == Mat<Scalar>::Identity(a.cols(), a.cols()));
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  const Index n = std::min(a.rows(), a.cols());
  for (Index i = 0; i < s.D.rows(); ++i)
    for (Index j = 0; j < s.D.cols(); ++j)
      if (i != j)
        CHECK(s.D(i, j) == 0);
  for (Index i = 0; i < n; ++i) {
    CHECK(s.D(i, i) >= 0);
    CHECK((i < s.rank) == (s.D(i, i) != 0));
    if (i + 1 < s.rank)
      CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  }
}

} // namespace

TEST_SUITE("intmat") {

TEST_CASE("snf of the identity") {
  IntMatrix a = IntMatrix::Identity(2, 2);
  auto s = smith_normal_form(a);
  check_snf(a, s);
  CHECK(s.D == a);
  CHECK(s.rank == 2);
}

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
  IntMatrix a = mat({{2, 4}, {6, 8}});
  auto s = smith_normal_form(a);
  check_snf(a, s);
  CHECK(s.D == mat({{2, 0}, {0, 4}}));
  // d_1 is the gcd of the entries and d_1 d_2 = |det|.
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(0, 0) * s.D(1, 1) == abs_of(determinant(a)));
}

TEST_CASE("snf of a zero matrix") {
  IntMatrix a = IntMatrix::Zero(2, 3);
  auto s = smith_normal_form(a);
  check_snf(a, s);
  CHECK(s.D.isZero());
  CHECK(s.rank == 0);
}

TEST_CASE("snf with negative entries and a non-dividing pivot") {
  IntMatrix a = mat({{4, -3}, {0, 4}});
  auto s = smith_normal_form(a);
  check_snf(a, s);
  CHECK(s.D == mat({{1, 0}, {0, 16}}));
  check_snf(IntMatrix(mat({{-6, 0}, {0, 4}})), smith_normal_form(mat({{-6, 0}, {0, 4}})));
  CHECK(smith_normal_form(mat({{2, 0}, {0, 3}})).D == mat({{1, 0}, {0, 6}}));
}

TEST_CASE("snf of empty matrices") {
  check_snf(IntMatrix(0, 3), smith_normal_form(IntMatrix(0, 3)));
  check_snf(IntMatrix(2, 0), smith_normal_form(IntMatrix(2, 0)));
}

TEST_CASE("snf properties on random matrices") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> entry(-9, 9), dim(1, 5);
  for (int t = 0; t < 300; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j)
        a(i, j) = t % 3 == 0 ? entry(rng) * entry(rng) : entry(rng);
    check_snf(a, smith_normal_form(a));
  }
}

TEST_CASE("snf also runs over long long") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long long> entry(-5, 5);
  for (int t = 0; t < 100; ++t) {
    Mat<long long> a(3, 4);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 4; ++j)
        a(i, j) = entry(rng);
    auto s = smith_normal_form(a);
    check_snf(a, s);
    IntMatrix big = a.cast<Integer>();
    auto sb = smith_normal_form(big);
    CHECK(sb.D == s.D.cast<Integer>());
  }
}

TEST_CASE("snf survives entries beyond 64 bits") {
  IntMatrix a(2, 2);
  a << Integer("123456789012345678901234567890"), Integer(7),
      Integer(3), Integer("-98765432109876543210");
  auto s = smith_normal_form(a);
  check_snf(a, s);
  CHECK(s.D(0, 0) * s.D(1, 1) == abs_of(determinant(a)));
}

TEST_CASE("solve_integer examples") {
  IntVector b(2);
  b << 3, 5;
  auto x = solve_integer(IntMatrix(IntMatrix::Identity(2, 2)), b);
  REQUIRE(x);
  CHECK(*x == b);

  IntVector three(1);
  three << 3;
  CHECK_FALSE(solve_integer(mat({{2}}), three));

  IntVector one(1);
  one << 1;
  IntMatrix a = mat({{2, 3}});
  auto y = solve_integer(a, one);
  REQUIRE(y);
  CHECK(a * *y == one);

  CHECK_THROWS_AS(solve_integer(a, b), InvalidInput);
}

TEST_CASE("solve_integer agrees with brute force on [-3, 3]") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int t = 0; t < 150; ++t) {
    IntMatrix a(2, 2);
    IntVector b(2);
    for (Index i = 0; i < 2; ++i) {
      b(i) = entry(rng);
      for (Index j = 0; j < 2; ++j)
        a(i, j) = entry(rng);
    }
    bool found = false;
    for (long u = -18; u <= 18 && !found; ++u)
      for (long v = -18; v <= 18 && !found; ++v) {
        IntVector x(2);
        x << u, v;
        found = a * x == b;
      }
    auto x = solve_integer(a, b);
    if (x)
      CHECK(a * *x == b);
    // Any small solution implies the solver finds one.
    if (found)
      CHECK(x.has_value());
    // With nonzero determinant all solutions are within the search box.
    if (determinant(a) != 0)
      CHECK(x.has_value() == found);
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(IntMatrix(IntMatrix::Identity(3, 3))).cols() == 0);
  IntMatrix k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK((mat({{1, 1}}) * k).isZero());
  CHECK(abs_of(k(0, 0)) == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(kernel_basis(IntMatrix(IntMatrix::Zero(1, 2))).cols() == 2);
}

TEST_CASE("kernel_basis spans every small kernel vector") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a(1, 3);
    for (Index j = 0; j < 3; ++j)
      a(0, j) = entry(rng);
    IntMatrix k = kernel_basis(a);
    CHECK((a * k).isZero());
    for (long x0 = -3; x0 <= 3; ++x0)
      for (long x1 = -3; x1 <= 3; ++x1)
        for (long x2 = -3; x2 <= 3; ++x2) {
          IntVector x(3);
          x << x0, x1, x2;
          if ((a * x).isZero())
            CHECK(solve_integer(k, x).has_value());
        }
  }
}

TEST_CASE("lattice_basis and determinant") {
  IntMatrix g = mat({{2, 4, 6}, {0, 2, 2}});
  IntMatrix b = lattice_basis(g);
  CHECK(b.cols() == 2);
  for (Index j = 0; j < g.cols(); ++j)
    CHECK(solve_integer(b, IntVector(g.col(j))).has_value());
  for (Index j = 0; j < b.cols(); ++j)
    CHECK(solve_integer(g, IntVector(b.col(j))).has_value());

  CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}})) == -5);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(mat({{1, 2}})), InvalidInput);
  CHECK(is_unimodular(mat({{2, 1}, {1, 1}})));
  CHECK_FALSE(is_unimodular(mat({{2, 0}, {0, 1}})));
}

TEST_CASE("integer helpers") {
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(floor_mod(Integer(-7), Integer(3)) == 2);
  CHECK(gcd_of(Integer(-12), Integer(18)) == 6);
  CHECK(lcm_of(Integer(4), Integer(6)) == 12);
  auto [g, x, y] = extended_gcd(Integer(240), Integer(46));
  CHECK(g == 2);
  CHECK(240 * x + 46 * y == g);
}

}
