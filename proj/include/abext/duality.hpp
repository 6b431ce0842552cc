#pragma once

// Character groups of finite abelian groups. A character of G is stored as an
// element of a carrier group with the same invariant factors; the pairing
// <x, chi> = sum_i x_i chi_i / d_i (mod 1) identifies the two.

#include "abext/extension.hpp"
#include "abext/group.hpp"

#include <string>

namespace abext {

// An exact element of Q/Z: numerator / denominator reduced, 0 <= num < den.
class CyclicFraction {
public:
  CyclicFraction() = default;
  CyclicFraction(const Integer &numerator, const Integer &denominator);

  const Integer &numerator() const { return num_; }
  const Integer &denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  CyclicFraction operator+(const CyclicFraction &o) const;
  CyclicFraction operator-() const;
  CyclicFraction operator-(const CyclicFraction &o) const;
  friend CyclicFraction operator*(const Integer &k, const CyclicFraction &f);
  friend bool operator==(const CyclicFraction &, const CyclicFraction &) = default;

private:
  Integer num_ = 0;
  Integer den_ = 1;
};

std::string to_string(const CyclicFraction &f);

class DualGroup {
public:
  // Throws UnsupportedInput when g is infinite.
  explicit DualGroup(FgGroup g);

  const FgGroup &base() const { return base_; }
  const FgGroup &carrier() const { return base_; }

  CyclicFraction pair(const IntVector &x, const IntVector &chi) const;
  // The character whose value on the i-th generator of the base is values[i].
  IntVector character_from_values(const std::vector<CyclicFraction> &values) const;

  // Exhaustive check in both arguments; intended for small groups.
  bool is_nondegenerate() const;

private:
  FgGroup base_;
};

DualGroup dual_group(const FgGroup &g);

// f^ : H^ -> G^ for f : G -> H, with <f(x), chi> = <x, f^(chi)>.
Morphism dual_morphism(const Morphism &f);

// 0 -> C^ -> B^ -> A^ -> 0.
Extension dual_extension(const Extension &e);

// G -> (G^)^, x |-> <x, .>, computed through the pairing.
Morphism evaluation_map(const FgGroup &g);

// Exhaustive adjointness check <f(x), chi> = <x, f^(chi)>.
bool is_adjoint(const Morphism &f, const Morphism &f_hat);

// E and its double dual agree under the evaluation isomorphisms on every
// element of A and B.
bool double_dual_matches(const Extension &e);

} // namespace abext
