#pragma once

// Hom(C, A), Ext(C, A) and its subgroups Ext_t(C, A) and Pext(C, A) as
// explicit groups, plus the maps they inherit from morphisms of either
// argument.
//
// Ext(C, A) is assembled one cyclic summand at a time: every torsion
// generator c_i of C (order d_i) contributes A / d_i A, which splits into
// Z/d_i per free generator of A and Z/gcd(d_i, e_j) per torsion generator of
// A (order e_j). Summands of order 1 are dropped. Each kept summand remembers
// the (i, j) pair it came from.

#include "abext/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abext {

struct ExtComponent {
  Index c_index = 0;   // torsion generator of C
  Index a_target = 0;  // generator of A (canonical index)
  bool torsion_target = false;
  Integer order;       // order of this cyclic summand

  std::string target_label() const;
  friend bool operator==(const ExtComponent &, const ExtComponent &) = default;
};

class ExtGroup {
public:
  ExtGroup() = default;
  ExtGroup(FgGroup c, FgGroup a, std::vector<ExtComponent> components);

  const FgGroup &C() const { return c_; }
  const FgGroup &A() const { return a_; }
  const std::vector<ExtComponent> &components() const { return components_; }
  Index size() const { return static_cast<Index>(components_.size()); }
  // Canonical form of the direct sum of the component cyclic groups.
  const FgGroup &structure() const { return structure_; }

  // Total number of classes.
  Integer cardinality() const;

  friend bool operator==(const ExtGroup &, const ExtGroup &) = default;

private:
  FgGroup c_, a_;
  std::vector<ExtComponent> components_;
  FgGroup structure_;
};

class ExtElement {
public:
  ExtElement() = default;
  // Reduces each coordinate modulo its component order.
  ExtElement(ExtGroup parent, IntVector coords);
  static ExtElement zero(const ExtGroup &g);
  // Component k set to 1.
  static ExtElement unit(const ExtGroup &g, Index k);

  const ExtGroup &parent() const { return parent_; }
  const IntVector &coords() const { return coords_; }
  bool is_zero() const;

  ExtElement operator+(const ExtElement &o) const;
  ExtElement operator-(const ExtElement &o) const;
  ExtElement operator-() const;
  friend ExtElement operator*(const Integer &k, const ExtElement &x);
  friend bool operator==(const ExtElement &a, const ExtElement &b) {
    return a.parent_ == b.parent_ && a.coords_ == b.coords_;
  }

  // Representative a_i in A of the i-th torsion generator's coordinate
  // block; zero entries where no component exists.
  IntVector representative(Index c_index) const;

private:
  ExtGroup parent_;
  IntVector coords_;
};

std::string to_string(const ExtElement &x);

// Enumerates every element of a finite Ext group in mixed-radix order.
std::vector<ExtElement> all_elements(const ExtGroup &g);

ExtGroup ext_group(const FgGroup &c, const FgGroup &a);

// The components aimed at torsion generators of A.
class ExtTSubgroup {
public:
  explicit ExtTSubgroup(ExtGroup parent);

  const ExtGroup &parent() const { return parent_; }
  const std::vector<Index> &members() const { return members_; }
  const FgGroup &structure() const { return structure_; }
  bool contains(const ExtElement &x) const;
  bool is_trivial() const { return structure_.is_trivial(); }
  // Elements of the parent whose coordinates vanish outside members().
  std::vector<ExtElement> elements() const;

private:
  ExtGroup parent_;
  std::vector<Index> members_;
  FgGroup structure_;
};

ExtTSubgroup ext_t_subgroup(const FgGroup &c, const FgGroup &a);

// Pext vanishes for finitely generated groups: the returned group has no
// components. Concrete pure extensions are checked against this with
// `pext_certificate_holds` in extensions.hpp.
ExtGroup pext_group(const FgGroup &c, const FgGroup &a);

FgGroup hom_group(const FgGroup &c, const FgGroup &a);

// A group homomorphism between Ext groups, acting on component coordinates.
struct ExtHom {
  ExtGroup source;
  ExtGroup target;
  IntMatrix matrix; // target.size() x source.size()

  ExtElement operator()(const ExtElement &x) const;
};

// mu_* : Ext(C, A) -> Ext(C, A') for mu : A -> A'.
ExtHom induced_pushforward(const Morphism &mu, const FgGroup &c);
// gamma^* : Ext(C, A) -> Ext(C', A) for gamma : C' -> C.
ExtHom induced_pullback(const Morphism &gamma, const FgGroup &a);

// Ext(C, tA); requires C torsion.
FgGroup ext_t_from_torsion_target(const FgGroup &c, const FgGroup &a);
// Ext(C/tC, A); requires A torsion-free.
FgGroup ext_t_from_free_quotient(const FgGroup &c, const FgGroup &a);

// t-projective among f.g. groups <=> free.
bool fg_t_projective(const FgGroup &c);
// Ext_t(C, A) = 0 for every f.g. C <=> A torsion-free.
bool fg_t_injective_witness(const FgGroup &a);

// For non-free C: a nonzero element of Ext_t(C, Z/d_1), d_1 the first
// invariant factor of C. nullopt when C is free.
std::optional<ExtElement> t_projectivity_obstruction(const FgGroup &c);
// For A with torsion: a nonzero element of Ext_t(Z/e_1, A).
std::optional<ExtElement> t_injectivity_obstruction(const FgGroup &a);

} // namespace abext
