#include "abext/extension.hpp"

namespace abext {

std::optional<std::string> exactness_failure(const Morphism &phi,
                                             const Morphism &psi) {
  if (!(phi.codomain() == psi.domain()))
    throw InvalidInput("codomain of phi (" + to_string(phi.codomain()) +
                       ") differs from domain of psi (" +
                       to_string(psi.domain()) + ")");
  if (!is_injective(phi))
    return "phi is not injective";
  if (!is_surjective(psi))
    return "psi is not surjective";
  Morphism composite = compose(psi, phi);
  if (!(composite == Morphism::zero(phi.domain(), psi.codomain())) ||
      !image_contained(kernel(psi).inclusion, phi))
    return "image of phi differs from kernel of psi";
  return std::nullopt;
}

Extension::Extension(Morphism phi, Morphism psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {
  if (auto why = exactness_failure(phi_, psi_))
    throw ExactnessViolation("not a short exact sequence: " + *why);
}

TorsionSequence torsion_sequence(const Extension &e) {
  return {restrict_to_torsion(e.phi()), restrict_to_torsion(e.psi())};
}

bool is_t_extension(const Extension &e) {
  auto t = torsion_sequence(e);
  return !exactness_failure(t.phi, t.psi).has_value();
}

Extension split_extension(const FgGroup &c, const FgGroup &a) {
  auto s = direct_sum(a, c);
  return Extension(s.inject_first, s.project_second);
}

Extension pushout(const Extension &e, const Morphism &mu) {
  if (!(mu.domain() == e.A()))
    throw InvalidInput("pushout: morphism does not start at A = " +
                       to_string(e.A()));
  const FgGroup &a_new = mu.codomain();
  auto sum = direct_sum(a_new, e.B());
  // a -> (mu(a), -phi(a)); its image is the subgroup H.
  Morphism h = compose(sum.inject_first, mu) +
               -compose(sum.inject_second, e.phi());
  Quotient q = cokernel(h);
  Morphism phi = compose(q.projection, sum.inject_first);
  IntMatrix psi_on_sum = compose(e.psi(), sum.project_second).matrix();
  Morphism psi(q.group, e.C(), psi_on_sum * q.lift);
  return Extension(std::move(phi), std::move(psi));
}

Extension pullback(const Extension &e, const Morphism &gamma) {
  if (!(gamma.codomain() == e.C()))
    throw InvalidInput("pullback: morphism does not end at C = " +
                       to_string(e.C()));
  auto sum = direct_sum(e.B(), gamma.domain());
  Morphism g = compose(e.psi(), sum.project_first) +
               -compose(gamma, sum.project_second);
  Subgroup middle = kernel(g);

  const Index na = e.A().generator_count();
  IntMatrix phi_matrix(middle.group.generator_count(), na);
  Morphism into_sum = compose(sum.inject_first, e.phi());
  for (Index i = 0; i < na; ++i) {
    auto coords = preimage(middle.inclusion, into_sum.matrix().col(i));
    if (!coords)
      throw std::logic_error("pullback: (phi(a), 0) outside the fibre product");
    phi_matrix.col(i) = *coords;
  }
  Morphism phi(e.A(), middle.group, std::move(phi_matrix));
  Morphism psi = compose(sum.project_second, middle.inclusion);
  return Extension(std::move(phi), std::move(psi));
}

Extension direct_sum_ext(const Extension &e1, const Extension &e2) {
  auto sa = direct_sum(e1.A(), e2.A());
  auto sb = direct_sum(e1.B(), e2.B());
  auto sc = direct_sum(e1.C(), e2.C());
  Morphism phi =
      compose(sb.inject_first, compose(e1.phi(), sa.project_first)) +
      compose(sb.inject_second, compose(e2.phi(), sa.project_second));
  Morphism psi =
      compose(sc.inject_first, compose(e1.psi(), sb.project_first)) +
      compose(sc.inject_second, compose(e2.psi(), sb.project_second));
  return Extension(std::move(phi), std::move(psi));
}

namespace {

void require_same_ends(const Extension &e1, const Extension &e2,
                       const char *what) {
  if (!(e1.A() == e2.A()) || !(e1.C() == e2.C()))
    throw InvalidInput(std::string(what) +
                       ": extensions have different end groups (" +
                       to_string(e1.A()) + " by " + to_string(e1.C()) +
                       " vs " + to_string(e2.A()) + " by " +
                       to_string(e2.C()) + ")");
}

struct DiagonalMaps {
  Morphism diagonal;   // C -> C + C
  Morphism codiagonal; // A + A -> A
};

DiagonalMaps diagonal_maps(const FgGroup &c, const FgGroup &a) {
  auto sc = direct_sum(c, c);
  auto sa = direct_sum(a, a);
  return {sc.inject_first + sc.inject_second,
          sa.project_first + sa.project_second};
}

} // namespace

Extension baer_sum(const Extension &e1, const Extension &e2) {
  require_same_ends(e1, e2, "baer_sum");
  auto maps = diagonal_maps(e1.C(), e1.A());
  return pushout(pullback(direct_sum_ext(e1, e2), maps.diagonal),
                 maps.codiagonal);
}

Extension baer_sum_pushout_first(const Extension &e1, const Extension &e2) {
  require_same_ends(e1, e2, "baer_sum");
  auto maps = diagonal_maps(e1.C(), e1.A());
  return pullback(pushout(direct_sum_ext(e1, e2), maps.codiagonal),
                  maps.diagonal);
}

// Lift each torsion generator c_i of C to b_i, write d_i b_i = phi(a_i) and
// record a_i modulo d_i A.
ExtElement classify(const Extension &e) {
  ExtGroup g = ext_group(e.C(), e.A());
  IntVector coords = IntVector::Zero(g.size());
  for (Index i = 0; i < e.C().torsion_count(); ++i) {
    IntVector unit = IntVector::Zero(e.C().generator_count());
    unit(i) = 1;
    auto lift = preimage(e.psi(), unit);
    if (!lift)
      throw std::logic_error("classify: psi is not surjective");
    IntVector multiple = reduce(e.B(), *lift * e.C().generator_order(i));
    auto a = preimage(e.phi(), multiple);
    if (!a)
      throw std::logic_error("classify: d_i b_i outside the image of phi");
    const auto &comps = g.components();
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (comps[k].c_index == i)
        coords(static_cast<Index>(k)) = (*a)(comps[k].a_target);
  }
  return ExtElement(std::move(g), std::move(coords));
}

Extension realize_with_offsets(const ExtElement &x, const IntMatrix &offsets) {
  const FgGroup &a = x.parent().A();
  const FgGroup &c = x.parent().C();
  const Index na = a.generator_count();
  const Index nc = c.generator_count();
  const Index kc = c.torsion_count();
  if (offsets.rows() != na || offsets.cols() != kc)
    throw InvalidInput("realize: offset matrix has the wrong shape");

  // Generators: those of A, then one lift per generator of C.
  // Relations: e_j a_j = 0, and d_i x_i = a_i + d_i * offset_i.
  IntMatrix rel = IntMatrix::Zero(na + nc, a.torsion_count() + kc);
  rel.topLeftCorner(na, a.torsion_count()) = a.relation_matrix();
  for (Index i = 0; i < kc; ++i) {
    const Integer d = c.generator_order(i);
    IntVector rep = x.representative(i) + offsets.col(i) * d;
    rel.col(a.torsion_count() + i).head(na) = -rep;
    rel(na + i, a.torsion_count() + i) = d;
  }
  auto p = present(na + nc, rel);
  Morphism phi(a, p.group, p.projection.matrix().leftCols(na));
  IntMatrix psi_pres = IntMatrix::Zero(nc, na + nc);
  psi_pres.rightCols(nc) = IntMatrix::Identity(nc, nc);
  Morphism psi(p.group, c, psi_pres * p.lift);
  return Extension(std::move(phi), std::move(psi));
}

Extension realize(const ExtElement &x) {
  return realize_with_offsets(
      x, IntMatrix::Zero(x.parent().A().generator_count(),
                         x.parent().C().torsion_count()));
}

bool are_equivalent(const Extension &e1, const Extension &e2) {
  require_same_ends(e1, e2, "are_equivalent");
  return classify(e1) == classify(e2);
}

std::optional<Morphism> find_retraction(const Extension &e) {
  return find_left_inverse(e.phi());
}

bool splits(const Extension &e) { return find_retraction(e).has_value(); }

bool is_pure_extension(const Extension &e) { return is_pure(e.phi()); }

bool pext_certificate_holds(const Extension &e) {
  return !is_pure_extension(e) || splits(e);
}

} // namespace abext
