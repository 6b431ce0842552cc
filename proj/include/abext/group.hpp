#pragma once

// Finitely generated abelian groups in invariant-factor form, their elements
// and morphisms, and the subgroup/quotient machinery built on top of SNF.
//
// Generator order is fixed across the library: torsion generators in factor
// order, then free generators. Morphism matrices have one column per domain
// generator and one row per codomain generator.

#include "abext/intmat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abext {

class FgGroup {
public:
  FgGroup() = default;
  // Validates the canonical-form invariants: every factor >= 2 and each
  // divides the next.
  FgGroup(Index free_rank, std::vector<Integer> invariant_factors);

  static FgGroup trivial() { return {}; }
  static FgGroup free(Index rank) { return FgGroup(rank, {}); }
  static FgGroup cyclic(const Integer &n);

  Index free_rank() const { return free_rank_; }
  const std::vector<Integer> &invariant_factors() const { return factors_; }
  Index torsion_count() const { return static_cast<Index>(factors_.size()); }
  Index generator_count() const { return torsion_count() + free_rank_; }

  // Order of the i-th generator; 0 for free generators.
  Integer generator_order(Index i) const {
    return i < torsion_count() ? factors_[static_cast<std::size_t>(i)]
                               : Integer(0);
  }

  // n x k with factor d_i at (i, i): columns span the relations.
  IntMatrix relation_matrix() const;

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

  friend bool operator==(const FgGroup &, const FgGroup &) = default;

private:
  Index free_rank_ = 0;
  std::vector<Integer> factors_;
};

std::string to_string(const FgGroup &g);

// Reduce torsion coordinates of a coordinate vector (or of each column) into
// [0, d_i).
IntVector reduce(const FgGroup &g, IntVector v);
IntMatrix reduce_columns(const FgGroup &g, IntMatrix m);

class Element {
public:
  Element(FgGroup group, IntVector coords);
  static Element zero(const FgGroup &g);

  const FgGroup &group() const { return group_; }
  const IntVector &coords() const { return coords_; }
  bool is_zero() const;

  // Torsion coordinates first, then free ones.
  IntVector torsion_coords() const { return coords_.head(group_.torsion_count()); }
  IntVector free_coords() const { return coords_.tail(group_.free_rank()); }

  Element operator+(const Element &o) const;
  Element operator-(const Element &o) const;
  Element operator-() const;
  friend Element operator*(const Integer &k, const Element &e);
  friend bool operator==(const Element &, const Element &) = default;

  // Order of the element; nullopt when it has infinite order.
  std::optional<Integer> order() const;

private:
  FgGroup group_;
  IntVector coords_;
};

class Morphism {
public:
  Morphism() = default;
  // Reduces matrix entries and checks well-definedness; throws InvalidInput.
  Morphism(FgGroup domain, FgGroup codomain, IntMatrix matrix);

  static Morphism identity(const FgGroup &g);
  static Morphism zero(const FgGroup &domain, const FgGroup &codomain);
  // Multiplication by k on g.
  static Morphism scalar(const FgGroup &g, const Integer &k);

  const FgGroup &domain() const { return domain_; }
  const FgGroup &codomain() const { return codomain_; }
  const IntMatrix &matrix() const { return matrix_; }

  IntVector apply(const IntVector &x) const;
  Element operator()(const Element &x) const;

  friend bool operator==(const Morphism &a, const Morphism &b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.matrix_ == b.matrix_;
  }

private:
  FgGroup domain_;
  FgGroup codomain_;
  IntMatrix matrix_;
};

// g after f.
Morphism compose(const Morphism &g, const Morphism &f);
Morphism operator+(const Morphism &f, const Morphism &g);
Morphism operator-(const Morphism &f);

// Canonical form of Z^generators / (column span of relations). The
// projection goes from the free group on the presentation generators; lift
// sends canonical generators back to presentation coordinates, so
// projection * lift is the identity on the canonical group.
struct Presentation {
  FgGroup group;
  Morphism projection;
  IntMatrix lift;
};

Presentation present(Index generators, const IntMatrix &relations);

inline std::pair<FgGroup, Morphism> canonicalize(Index generators,
                                                 const IntMatrix &relations) {
  auto p = present(generators, relations);
  return {std::move(p.group), std::move(p.projection)};
}

// A subgroup of `ambient` represented by its inclusion.
struct Subgroup {
  FgGroup group;
  Morphism inclusion;
};

// Subgroup of g generated by the columns of `generators`.
Subgroup generated_subgroup(const FgGroup &g, const IntMatrix &generators);

// Some x with f(x) = y, or nullopt when y is not in the image.
std::optional<IntVector> preimage(const Morphism &f, const IntVector &y);

bool contains(const Morphism &inclusion, const IntVector &y);
// Image of `sub` lies in image of `super` (both morphisms into the same group).
bool image_contained(const Morphism &sub, const Morphism &super);

Subgroup torsion_subgroup(const FgGroup &g);
// f restricted as a morphism t(domain) -> t(codomain).
Morphism restrict_to_torsion(const Morphism &f);

Subgroup kernel(const Morphism &f);
Subgroup image(const Morphism &f);

struct Quotient {
  FgGroup group;
  Morphism projection;
  // Canonical quotient generators back to codomain coordinates.
  IntMatrix lift;
};
Quotient cokernel(const Morphism &f);

bool is_injective(const Morphism &f);
bool is_surjective(const Morphism &f);
bool is_isomorphism(const Morphism &f);

struct DirectSum {
  FgGroup group;
  Morphism inject_first, inject_second;
  Morphism project_first, project_second;
};
DirectSum direct_sum(const FgGroup &g, const FgGroup &h);

// Some r with r o incl = id, or nullopt. Total decision procedure.
std::optional<Morphism> find_left_inverse(const Morphism &incl);

// Pure <=> direct summand for f.g. groups; throws InvalidInput when the
// morphism is not injective.
bool is_pure(const Morphism &incl);

// Smallest n in [1, bound] with nH != H cap nG, if any.
std::optional<Integer> purity_witness(const Morphism &incl, int bound = 100);
// Whether nH == H cap nG for one n.
bool purity_condition_holds(const Morphism &incl, const Integer &n);

bool is_torsion(const FgGroup &g);
bool is_torsion_free(const FgGroup &g);
bool is_free(const FgGroup &g);
bool is_divisible(const FgGroup &g);
std::optional<Integer> order(const FgGroup &g);
Integer exponent(const FgGroup &g);

} // namespace abext
