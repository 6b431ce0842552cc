#include "abext/group.hpp"

#include <sstream>

namespace abext {

FgGroup::FgGroup(Index free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  if (free_rank_ < 0)
    throw InvalidInput("negative free rank");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw InvalidInput("invariant factor " + factors_[i].str() +
                         " is not >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InvalidInput("invariant factors " + factors_[i - 1].str() +
                         ", " + factors_[i].str() +
                         " do not form a divisibility chain");
  }
}

FgGroup FgGroup::cyclic(const Integer &n) {
  if (n < 0)
    throw InvalidInput("cyclic group of negative order");
  if (n == 0)
    return free(1);
  if (n == 1)
    return trivial();
  return FgGroup(0, {n});
}

IntMatrix FgGroup::relation_matrix() const {
  IntMatrix r = IntMatrix::Zero(generator_count(), torsion_count());
  for (Index i = 0; i < torsion_count(); ++i)
    r(i, i) = factors_[static_cast<std::size_t>(i)];
  return r;
}

std::string to_string(const FgGroup &g) {
  if (g.is_trivial())
    return "0";
  std::ostringstream out;
  const char *sep = "";
  if (g.free_rank() == 1) {
    out << "Z";
    sep = " + ";
  } else if (g.free_rank() > 1) {
    out << "Z^" << g.free_rank();
    sep = " + ";
  }
  for (const auto &d : g.invariant_factors()) {
    out << sep << "Z/" << d;
    sep = " + ";
  }
  return out.str();
}

IntVector reduce(const FgGroup &g, IntVector v) {
  for (Index i = 0; i < g.torsion_count(); ++i)
    v(i) = floor_mod(v(i), g.generator_order(i));
  return v;
}

IntMatrix reduce_columns(const FgGroup &g, IntMatrix m) {
  for (Index i = 0; i < g.torsion_count(); ++i) {
    const Integer d = g.generator_order(i);
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = floor_mod(m(i, j), d);
  }
  return m;
}

// ---------------------------------------------------------------- Element

Element::Element(FgGroup group, IntVector coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.generator_count())
    throw InvalidInput("element has " + std::to_string(coords_.size()) +
                       " coordinates, group has " +
                       std::to_string(group_.generator_count()) +
                       " generators");
  coords_ = reduce(group_, std::move(coords_));
}

Element Element::zero(const FgGroup &g) {
  return Element(g, IntVector::Zero(g.generator_count()));
}

bool Element::is_zero() const {
  for (Index i = 0; i < coords_.size(); ++i)
    if (coords_(i) != 0)
      return false;
  return true;
}

Element Element::operator+(const Element &o) const {
  if (!(group_ == o.group_))
    throw InvalidInput("adding elements of different groups");
  return Element(group_, coords_ + o.coords_);
}

Element Element::operator-(const Element &o) const { return *this + (-o); }

Element Element::operator-() const { return Element(group_, -coords_); }

Element operator*(const Integer &k, const Element &e) {
  return Element(e.group_, k * e.coords_);
}

std::optional<Integer> Element::order() const {
  for (Index i = group_.torsion_count(); i < coords_.size(); ++i)
    if (coords_(i) != 0)
      return std::nullopt;
  Integer n = 1;
  for (Index i = 0; i < group_.torsion_count(); ++i) {
    const Integer d = group_.generator_order(i);
    n = lcm_of(n, Integer(d / gcd_of(d, coords_(i))));
  }
  return n;
}

// --------------------------------------------------------------- Morphism

Morphism::Morphism(FgGroup domain, FgGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generator_count() ||
      matrix_.cols() != domain_.generator_count())
    throw InvalidInput("morphism matrix is " + std::to_string(matrix_.rows()) +
                       "x" + std::to_string(matrix_.cols()) + ", expected " +
                       std::to_string(codomain_.generator_count()) + "x" +
                       std::to_string(domain_.generator_count()));
  matrix_ = reduce_columns(codomain_, std::move(matrix_));
  for (Index i = 0; i < domain_.torsion_count(); ++i) {
    const Integer d = domain_.generator_order(i);
    for (Index j = 0; j < codomain_.generator_count(); ++j) {
      const Integer e = codomain_.generator_order(j);
      const Integer image_of_relation = d * matrix_(j, i);
      bool ok = e == 0 ? image_of_relation == 0 : image_of_relation % e == 0;
      if (!ok)
        throw InvalidInput("morphism is not well defined: generator " +
                           std::to_string(i) + " has order " + d.str() +
                           " but its image does not");
    }
  }
}

Morphism Morphism::identity(const FgGroup &g) {
  return Morphism(g, g,
                  IntMatrix::Identity(g.generator_count(), g.generator_count()));
}

Morphism Morphism::zero(const FgGroup &domain, const FgGroup &codomain) {
  return Morphism(domain, codomain,
                  IntMatrix::Zero(codomain.generator_count(),
                                  domain.generator_count()));
}

Morphism Morphism::scalar(const FgGroup &g, const Integer &k) {
  IntMatrix m = IntMatrix::Identity(g.generator_count(), g.generator_count());
  return Morphism(g, g, m * k);
}

IntVector Morphism::apply(const IntVector &x) const {
  return reduce(codomain_, matrix_ * x);
}

Element Morphism::operator()(const Element &x) const {
  if (!(x.group() == domain_))
    throw InvalidInput("element is not in the morphism's domain");
  return Element(codomain_, matrix_ * x.coords());
}

Morphism compose(const Morphism &g, const Morphism &f) {
  if (!(f.codomain() == g.domain()))
    throw InvalidInput("cannot compose: " + to_string(f.codomain()) +
                       " != " + to_string(g.domain()));
  return Morphism(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

Morphism operator+(const Morphism &f, const Morphism &g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw InvalidInput("adding morphisms with different end groups");
  return Morphism(f.domain(), f.codomain(), f.matrix() + g.matrix());
}

Morphism operator-(const Morphism &f) {
  return Morphism(f.domain(), f.codomain(), -f.matrix());
}

// ------------------------------------------------------- canonical forms

Presentation present(Index generators, const IntMatrix &relations) {
  if (relations.rows() != generators)
    throw InvalidInput("relation matrix has " +
                       std::to_string(relations.rows()) + " rows for " +
                       std::to_string(generators) + " generators");
  auto snf = smith_normal_form(relations);
  std::vector<Index> rows;
  std::vector<Integer> factors;
  for (Index i = 0; i < snf.rank; ++i)
    if (snf.D(i, i) != 1) {
      rows.push_back(i);
      factors.push_back(snf.D(i, i));
    }
  const Index free_rank = generators - snf.rank;
  for (Index i = snf.rank; i < generators; ++i)
    rows.push_back(i);

  const Index n = static_cast<Index>(rows.size());
  IntMatrix proj(n, generators);
  IntMatrix lift(generators, n);
  for (Index k = 0; k < n; ++k) {
    proj.row(k) = snf.U.row(rows[static_cast<std::size_t>(k)]);
    lift.col(k) = snf.U_inv.col(rows[static_cast<std::size_t>(k)]);
  }
  FgGroup group(free_rank, std::move(factors));
  Morphism projection(FgGroup::free(generators), group, std::move(proj));
  return {std::move(group), std::move(projection), std::move(lift)};
}

namespace {

IntMatrix hcat(const IntMatrix &a, const IntMatrix &b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

} // namespace

Subgroup generated_subgroup(const FgGroup &g, const IntMatrix &generators) {
  if (generators.rows() != g.generator_count())
    throw InvalidInput("subgroup generators have the wrong length");
  const Index s = generators.cols();
  IntMatrix k = kernel_basis(hcat(generators, g.relation_matrix()));
  auto p = present(s, k.topRows(s));
  IntMatrix incl = generators * p.lift;
  Morphism inclusion(p.group, g, std::move(incl));
  return {std::move(p.group), std::move(inclusion)};
}

std::optional<IntVector> preimage(const Morphism &f, const IntVector &y) {
  if (y.size() != f.codomain().generator_count())
    throw InvalidInput("preimage target has the wrong length");
  auto z = solve_integer(hcat(f.matrix(), f.codomain().relation_matrix()), y);
  if (!z)
    return std::nullopt;
  return reduce(f.domain(), z->head(f.domain().generator_count()));
}

bool contains(const Morphism &inclusion, const IntVector &y) {
  return preimage(inclusion, y).has_value();
}

bool image_contained(const Morphism &sub, const Morphism &super) {
  if (!(sub.codomain() == super.codomain()))
    throw InvalidInput("comparing subgroups of different groups");
  for (Index j = 0; j < sub.matrix().cols(); ++j)
    if (!contains(super, sub.matrix().col(j)))
      return false;
  return true;
}

Subgroup torsion_subgroup(const FgGroup &g) {
  FgGroup t(0, g.invariant_factors());
  IntMatrix incl = IntMatrix::Identity(g.generator_count(), t.generator_count());
  return {t, Morphism(t, g, std::move(incl))};
}

Morphism restrict_to_torsion(const Morphism &f) {
  FgGroup td(0, f.domain().invariant_factors());
  FgGroup tc(0, f.codomain().invariant_factors());
  // Torsion generators land in the torsion rows; free rows are zero there.
  return Morphism(td, tc,
                  f.matrix().topLeftCorner(tc.generator_count(),
                                           td.generator_count()));
}

Subgroup kernel(const Morphism &f) {
  const Index n = f.domain().generator_count();
  IntMatrix k =
      kernel_basis(hcat(f.matrix(), f.codomain().relation_matrix()));
  return generated_subgroup(f.domain(), k.topRows(n));
}

Subgroup image(const Morphism &f) {
  return generated_subgroup(f.codomain(), f.matrix());
}

Quotient cokernel(const Morphism &f) {
  const FgGroup &h = f.codomain();
  auto p = present(h.generator_count(), hcat(h.relation_matrix(), f.matrix()));
  Morphism projection(h, p.group, p.projection.matrix());
  return {std::move(p.group), std::move(projection), std::move(p.lift)};
}

bool is_injective(const Morphism &f) { return kernel(f).group.is_trivial(); }

bool is_surjective(const Morphism &f) {
  return cokernel(f).group.is_trivial();
}

bool is_isomorphism(const Morphism &f) {
  return is_injective(f) && is_surjective(f);
}

DirectSum direct_sum(const FgGroup &g, const FgGroup &h) {
  const Index ng = g.generator_count();
  const Index nh = h.generator_count();
  IntMatrix rel = IntMatrix::Zero(ng + nh, g.torsion_count() + h.torsion_count());
  rel.topLeftCorner(ng, g.torsion_count()) = g.relation_matrix();
  rel.bottomRightCorner(nh, h.torsion_count()) = h.relation_matrix();
  auto p = present(ng + nh, rel);
  const IntMatrix &proj = p.projection.matrix();
  DirectSum out{p.group,
                Morphism(g, p.group, proj.leftCols(ng)),
                Morphism(h, p.group, proj.rightCols(nh)),
                Morphism(p.group, g, p.lift.topRows(ng)),
                Morphism(p.group, h, p.lift.bottomRows(nh))};
  return out;
}

// Solves r o incl = id row by row. Row j of r is constrained by
//   sum_k r_k M_{k i} - e_j s_i = delta_{ji}   (one per domain generator)
//   f_k r_k - e_j t_k = 0                     (one per torsion generator of G)
// where e_j is the order of the j-th domain generator (0 if free) and f_k the
// orders of the codomain's torsion generators.
std::optional<Morphism> find_left_inverse(const Morphism &incl) {
  const FgGroup &h = incl.domain();
  const FgGroup &g = incl.codomain();
  const Index nh = h.generator_count();
  const Index ng = g.generator_count();
  const Index kg = g.torsion_count();
  const IntMatrix &m = incl.matrix();

  IntMatrix rho(nh, ng);
  for (Index j = 0; j < nh; ++j) {
    const Integer e = h.generator_order(j);
    IntMatrix system = IntMatrix::Zero(nh + kg, ng + nh + kg);
    IntVector rhs = IntVector::Zero(nh + kg);
    system.topLeftCorner(nh, ng) = m.transpose();
    for (Index i = 0; i < nh; ++i)
      system(i, ng + i) = -e;
    rhs(j) = 1;
    for (Index k = 0; k < kg; ++k) {
      system(nh + k, k) = g.generator_order(k);
      system(nh + k, ng + nh + k) = -e;
    }
    auto sol = solve_integer(system, rhs);
    if (!sol)
      return std::nullopt;
    rho.row(j) = sol->head(ng).transpose();
  }
  return Morphism(g, h, std::move(rho));
}

bool is_pure(const Morphism &incl) {
  if (!is_injective(incl))
    throw InvalidInput("purity is defined for subgroups; the morphism is not "
                       "injective");
  return find_left_inverse(incl).has_value();
}

bool purity_condition_holds(const Morphism &incl, const Integer &n) {
  const FgGroup &h = incl.domain();
  const FgGroup &g = incl.codomain();
  auto g_mod_n = cokernel(Morphism::scalar(g, n));
  Subgroup meet = kernel(compose(g_mod_n.projection, incl)); // H cap nG
  Subgroup multiples = image(Morphism::scalar(h, n));         // nH
  return image_contained(meet.inclusion, multiples.inclusion) &&
         image_contained(multiples.inclusion, meet.inclusion);
}

std::optional<Integer> purity_witness(const Morphism &incl, int bound) {
  for (int n = 1; n <= bound; ++n)
    if (!purity_condition_holds(incl, Integer(n)))
      return Integer(n);
  return std::nullopt;
}

bool is_torsion(const FgGroup &g) { return g.free_rank() == 0; }
bool is_torsion_free(const FgGroup &g) {
  return g.invariant_factors().empty();
}
bool is_free(const FgGroup &g) { return is_torsion_free(g); }
bool is_divisible(const FgGroup &g) { return g.is_trivial(); }

std::optional<Integer> order(const FgGroup &g) {
  if (g.free_rank() > 0)
    return std::nullopt;
  Integer n = 1;
  for (const auto &d : g.invariant_factors())
    n *= d;
  return n;
}

Integer exponent(const FgGroup &g) {
  return g.invariant_factors().empty() ? Integer(1)
                                       : g.invariant_factors().back();
}

} // namespace abext
