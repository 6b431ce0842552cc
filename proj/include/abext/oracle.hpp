#pragma once

// Brute-force ground truth for finite groups: symmetric 2-cocycles modulo
// coboundaries, and exhaustive searches over small middle groups.
//
// Nothing here goes through extcalc; classification of a cocycle is done in
// the cocycle lattice itself.

#include "abext/extension.hpp"
#include "abext/group.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

namespace abext::oracle {

struct Caps {
  std::int64_t max_c_order = 8;
  std::int64_t max_a_order = 8;
  std::int64_t max_middle_order = 64;
};

// Elements of a finite FgGroup numbered in mixed radix (first coordinate
// fastest). Plain machine integers; orders are bounded by the caps.
class FiniteGroup {
public:
  explicit FiniteGroup(const FgGroup &g);

  std::int64_t size() const { return size_; }
  std::size_t rank() const { return factors_.size(); }
  const std::vector<std::int64_t> &factors() const { return factors_; }

  std::vector<std::int64_t> decode(std::int64_t index) const;
  std::int64_t encode(const std::vector<std::int64_t> &coords) const;
  std::int64_t add(std::int64_t x, std::int64_t y) const;
  std::int64_t negate(std::int64_t x) const;
  std::int64_t order_of(std::int64_t x) const;
  std::int64_t generator(std::size_t i) const;

private:
  std::vector<std::int64_t> factors_;
  std::int64_t size_ = 1;
};

// Normalized symmetric factor set f : C x C -> A; table[x * c_order + y] is the
// element index of f(x, y) in A.
struct Cocycle {
  FgGroup C;
  FgGroup A;
  std::int64_t c_order = 1;
  std::vector<std::int64_t> table;

  std::int64_t at(std::int64_t x, std::int64_t y) const;
  bool is_normalized() const;
  bool satisfies_cocycle_identity() const;
  bool is_symmetric() const;
  bool is_valid() const {
    return is_normalized() && is_symmetric() && satisfies_cocycle_identity();
  }
  Cocycle operator+(const Cocycle &o) const;
};

struct OracleClass {
  Cocycle representative;
  std::size_t index;
};

// Every class of symmetric cocycles of C with values in A, solved as one
// integer-linear system per cyclic factor of A. Representatives are the
// lexicographically smallest tables (entries in [0, e)) of their class.
class ExtensionCensus {
public:
  ExtensionCensus(const FgGroup &c, const FgGroup &a, const Caps &caps = {});

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<OracleClass> &classes() const { return classes_; }

  std::size_t class_of(const Cocycle &f) const;
  // Class index of class(i) + class(j).
  std::size_t add(std::size_t i, std::size_t j) const;

  const FgGroup &C() const { return c_; }
  const FgGroup &A() const { return a_; }

private:
  struct Block; // one cyclic factor of A
  std::vector<Integer> block_coords(const Block &b, const IntVector &v) const;
  IntVector block_vector(const Cocycle &f, std::size_t factor) const;

  FgGroup c_, a_;
  FiniteGroup cg_, ag_;
  std::vector<std::pair<std::int64_t, std::int64_t>> unknowns_; // (x, y), 0 < x <= y
  IntMatrix v_inv_; // from the SNF of the cocycle conditions
  std::vector<std::shared_ptr<const Block>> blocks_;
  std::vector<std::int64_t> radix_; // cyclic orders of the class group, in order
  std::vector<OracleClass> classes_;
};

std::vector<OracleClass> enumerate_classes(const FgGroup &c, const FgGroup &a,
                                           const Caps &caps = {});

// Middle group A x C with (a, c) + (a', c') = (a + a' + f(c, c'), c + c').
Extension cocycle_to_extension(const Cocycle &f);

// t-extension property decided on the multiplication table of A x C.
bool exhaustive_is_t_extension(const Cocycle &f);

std::set<std::size_t> oracle_t_classes(const FgGroup &c, const FgGroup &a,
                                       const Caps &caps = {});

// Exhaustive search for beta : B1 -> B2 with beta o phi1 = phi2 and
// psi2 o beta = psi1. Throws ResourceLimit when |B| exceeds the cap.
bool oracle_equivalent(const Extension &e1, const Extension &e2,
                       const Caps &caps = {});

// |Hom(C, A)| by enumerating generator images.
std::int64_t brute_force_hom_count(const FgGroup &c, const FgGroup &a);

} // namespace abext::oracle
