#pragma once

// Short exact sequences 0 -> A -phi-> B -psi-> C -> 0 as validated values,
// together with the constructions that act on them.

#include "abext/extcalc.hpp"
#include "abext/group.hpp"

#include <optional>
#include <string>

namespace abext {

class Extension {
public:
  // Throws ExactnessViolation naming the failed condition.
  Extension(Morphism phi, Morphism psi);

  const FgGroup &A() const { return phi_.domain(); }
  const FgGroup &B() const { return phi_.codomain(); }
  const FgGroup &C() const { return psi_.codomain(); }
  const Morphism &phi() const { return phi_; }
  const Morphism &psi() const { return psi_; }

private:
  Morphism phi_;
  Morphism psi_;
};

inline Extension make_extension(Morphism phi, Morphism psi) {
  return Extension(std::move(phi), std::move(psi));
}

// Which exactness condition fails for (phi, psi), or nullopt when the
// sequence is short exact.
std::optional<std::string> exactness_failure(const Morphism &phi,
                                             const Morphism &psi);

// 0 -> tA -> tB -> tC -> 0 with the restricted maps.
struct TorsionSequence {
  Morphism phi;
  Morphism psi;
};

TorsionSequence torsion_sequence(const Extension &e);
bool is_t_extension(const Extension &e);

Extension split_extension(const FgGroup &c, const FgGroup &a);

// Along mu : A -> A'. Middle group (A' + B)/{(mu(a), -phi(a))}.
Extension pushout(const Extension &e, const Morphism &mu);
// Along gamma : C' -> C. Middle group {(b, c') : psi(b) = gamma(c')}.
Extension pullback(const Extension &e, const Morphism &gamma);

Extension direct_sum_ext(const Extension &e1, const Extension &e2);

// Pushout along the codiagonal of the pullback along the diagonal.
Extension baer_sum(const Extension &e1, const Extension &e2);
// Same sum taken in the opposite order (pushout first).
Extension baer_sum_pushout_first(const Extension &e1, const Extension &e2);

ExtElement classify(const Extension &e);
Extension realize(const ExtElement &x);
// As realize, but the i-th torsion generator's relation uses
// a_i + d_i * offsets.col(i); the result is equivalent to realize(x).
Extension realize_with_offsets(const ExtElement &x, const IntMatrix &offsets);

bool are_equivalent(const Extension &e1, const Extension &e2);

std::optional<Morphism> find_retraction(const Extension &e);
bool splits(const Extension &e);

bool is_pure_extension(const Extension &e);
// A pure extension must split (Pext vanishes on f.g. groups).
bool pext_certificate_holds(const Extension &e);

} // namespace abext
