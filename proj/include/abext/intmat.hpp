#pragma once

// Exact integer linear algebra over Eigen dense matrices.
//
// Every routine is templated on the scalar type. The library instantiates
// them with `Integer` (GMP-backed, arbitrary precision); tests also run them
// over `long long` on small inputs as a cross-check.

#include "abext/errors.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <tuple>
#include <utility>

namespace abext {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using IntVector = Vec<Integer>;
using Index = Eigen::Index;

// Floor division / modulus; the divisor may be negative for floor_div.
template <typename Scalar>
Scalar floor_div(const Scalar &a, const Scalar &b) {
  Scalar q = a / b;
  Scalar r = a % b;
  if (r != 0 && ((r < 0) != (b < 0)))
    q -= 1;
  return q;
}

// Representative of a in [0, m) for m > 0; m == 0 leaves a untouched.
template <typename Scalar>
Scalar floor_mod(const Scalar &a, const Scalar &m) {
  if (m == 0)
    return a;
  Scalar r = a % m;
  if (r < 0)
    r += m;
  return r;
}

template <typename Scalar> Scalar abs_of(const Scalar &a) {
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar> Scalar gcd_of(Scalar a, Scalar b) {
  a = abs_of(a);
  b = abs_of(b);
  while (b != 0) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <typename Scalar> Scalar lcm_of(const Scalar &a, const Scalar &b) {
  if (a == 0 || b == 0)
    return Scalar(0);
  return abs_of(Scalar(a / gcd_of(a, b) * b));
}

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(const Scalar &a,
                                                const Scalar &b) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, s = 0;
  Scalar old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0)
    return {Scalar(-old_r), Scalar(-old_s), Scalar(-old_t)};
  return {old_r, old_s, old_t};
}

// U * A * V = D with U, V unimodular and D diagonal with d_0 | d_1 | ... ,
// all d_i >= 0 and the nonzero ones first. U_inv and V_inv are kept in step
// so callers can move between the two coordinate systems without inverting.
template <typename Scalar> struct SnfDecomposition {
  Mat<Scalar> U;
  Mat<Scalar> D;
  Mat<Scalar> V;
  Mat<Scalar> U_inv;
  Mat<Scalar> V_inv;
  Index rank = 0;

  Vec<Scalar> diagonal() const {
    Index n = std::min(D.rows(), D.cols());
    Vec<Scalar> d(n);
    for (Index i = 0; i < n; ++i)
      d(i) = D(i, i);
    return d;
  }
};

namespace detail {

template <typename Scalar> struct SnfWork {
  Mat<Scalar> D, U, V, U_inv, V_inv;

  void swap_rows(Index i, Index j) {
    if (i == j)
      return;
    D.row(i).swap(D.row(j));
    U.row(i).swap(U.row(j));
    U_inv.col(i).swap(U_inv.col(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j)
      return;
    D.col(i).swap(D.col(j));
    V.col(i).swap(V.col(j));
    V_inv.row(i).swap(V_inv.row(j));
  }
  // row_i += q * row_j
  void add_row(Index i, Index j, const Scalar &q) {
    D.row(i) += q * D.row(j);
    U.row(i) += q * U.row(j);
    U_inv.col(j) -= q * U_inv.col(i);
  }
  // col_i += q * col_j
  void add_col(Index i, Index j, const Scalar &q) {
    D.col(i) += q * D.col(j);
    V.col(i) += q * V.col(j);
    V_inv.row(j) -= q * V_inv.row(i);
  }
  void negate_row(Index i) {
    D.row(i) = -D.row(i);
    U.row(i) = -U.row(i);
    U_inv.col(i) = -U_inv.col(i);
  }
};

// Nearest-integer quotient; keeps remainders within half the pivot.
template <typename Scalar>
Scalar nearest_quotient(const Scalar &a, const Scalar &b) {
  Scalar q = floor_div(a, b);
  Scalar r = a - q * b;
  // r carries the sign of b; stepping q up by one gives r - b.
  if (abs_of(Scalar(2 * r)) > abs_of(b))
    q += 1;
  return q;
}

} // namespace detail

template <typename Derived>
SnfDecomposition<typename Derived::Scalar>
smith_normal_form(const Eigen::MatrixBase<Derived> &a) {
  using Scalar = typename Derived::Scalar;
  const Index m = a.rows();
  const Index n = a.cols();
  detail::SnfWork<Scalar> w{a, Mat<Scalar>::Identity(m, m),
                            Mat<Scalar>::Identity(n, n),
                            Mat<Scalar>::Identity(m, m),
                            Mat<Scalar>::Identity(n, n)};
  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found = false;
    for (;;) {
      // Pivot of minimal absolute value in the trailing block.
      Index pi = -1, pj = -1;
      Scalar best = 0;
      for (Index j = t; j < n; ++j)
        for (Index i = t; i < m; ++i)
          if (w.D(i, j) != 0 && (pi < 0 || abs_of(w.D(i, j)) < best)) {
            best = abs_of(w.D(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0)
        break;
      found = true;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const Scalar pivot = w.D(t, t);

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (w.D(i, t) == 0)
          continue;
        Scalar q = detail::nearest_quotient(Scalar(w.D(i, t)), pivot);
        if (q != 0)
          w.add_row(i, t, Scalar(-q));
        if (w.D(i, t) != 0)
          clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (w.D(t, j) == 0)
          continue;
        Scalar q = detail::nearest_quotient(Scalar(w.D(t, j)), pivot);
        if (q != 0)
          w.add_col(j, t, Scalar(-q));
        if (w.D(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (w.D(i, j) % pivot != 0) {
            bad = i;
            break;
          }
      if (bad < 0)
        break;
      w.add_row(t, bad, Scalar(1));
    }
    if (!found)
      break;
    if (w.D(t, t) < 0)
      w.negate_row(t);
  }
  return {std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.U_inv),
          std::move(w.V_inv), t};
}

// Some x with A x = b, or nullopt when no integer solution exists.
template <typename DerivedA, typename DerivedB>
std::optional<Vec<typename DerivedA::Scalar>>
solve_integer(const Eigen::MatrixBase<DerivedA> &a,
              const Eigen::MatrixBase<DerivedB> &b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.cols() != 1 || b.rows() != a.rows())
    throw InvalidInput("solve_integer: right-hand side has " +
                       std::to_string(b.rows()) + " entries, matrix has " +
                       std::to_string(a.rows()) + " rows");
  auto snf = smith_normal_form(a);
  Vec<Scalar> ub = snf.U * b;
  Vec<Scalar> y = Vec<Scalar>::Zero(a.cols());
  for (Index i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      const Scalar &d = snf.D(i, i);
      if (ub(i) % d != 0)
        return std::nullopt;
      y(i) = ub(i) / d;
    } else if (ub(i) != 0) {
      return std::nullopt;
    }
  }
  return Vec<Scalar>(snf.V * y);
}

// Columns form a Z-basis of {x : A x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived> &a) {
  auto snf = smith_normal_form(a);
  return snf.V.rightCols(a.cols() - snf.rank);
}

// Columns form a Z-basis of the lattice spanned by the columns of G.
template <typename Derived>
Mat<typename Derived::Scalar>
lattice_basis(const Eigen::MatrixBase<Derived> &g) {
  using Scalar = typename Derived::Scalar;
  auto snf = smith_normal_form(g);
  Mat<Scalar> basis(g.rows(), snf.rank);
  for (Index i = 0; i < snf.rank; ++i)
    basis.col(i) = snf.U_inv.col(i) * snf.D(i, i);
  return basis;
}

// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived> &a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols())
    throw InvalidInput("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0)
    return Scalar(1);
  Mat<Scalar> m = a;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index r = k + 1;
      while (r < n && m(r, k) == 0)
        ++r;
      if (r == n)
        return Scalar(0);
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return Scalar(sign * m(n - 1, n - 1));
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived> &a) {
  if (a.rows() != a.cols())
    return false;
  auto d = determinant(a);
  return d == 1 || d == -1;
}

} // namespace abext
