#include "abext/extcalc.hpp"

#include <sstream>

namespace abext {

namespace {

FgGroup canonical_sum_of_cyclics(const std::vector<Integer> &orders) {
  const Index n = static_cast<Index>(orders.size());
  IntMatrix rel = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    rel(i, i) = orders[static_cast<std::size_t>(i)];
  return present(n, rel).group;
}

} // namespace

std::string ExtComponent::target_label() const {
  return (torsion_target ? "torsion:" : "free:") + std::to_string(a_target);
}

ExtGroup::ExtGroup(FgGroup c, FgGroup a, std::vector<ExtComponent> components)
    : c_(std::move(c)), a_(std::move(a)), components_(std::move(components)) {
  std::vector<Integer> orders;
  orders.reserve(components_.size());
  for (const auto &comp : components_)
    orders.push_back(comp.order);
  structure_ = canonical_sum_of_cyclics(orders);
}

Integer ExtGroup::cardinality() const {
  Integer n = 1;
  for (const auto &comp : components_)
    n *= comp.order;
  return n;
}

// ------------------------------------------------------------ ExtElement

ExtElement::ExtElement(ExtGroup parent, IntVector coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.size())
    throw InvalidInput("Ext element has " + std::to_string(coords_.size()) +
                       " coordinates, group has " +
                       std::to_string(parent_.size()) + " components");
  for (Index k = 0; k < coords_.size(); ++k)
    coords_(k) = floor_mod(coords_(k),
                           parent_.components()[static_cast<std::size_t>(k)].order);
}

ExtElement ExtElement::zero(const ExtGroup &g) {
  return ExtElement(g, IntVector::Zero(g.size()));
}

ExtElement ExtElement::unit(const ExtGroup &g, Index k) {
  IntVector v = IntVector::Zero(g.size());
  v(k) = 1;
  return ExtElement(g, std::move(v));
}

bool ExtElement::is_zero() const {
  for (Index k = 0; k < coords_.size(); ++k)
    if (coords_(k) != 0)
      return false;
  return true;
}

ExtElement ExtElement::operator+(const ExtElement &o) const {
  if (!(parent_ == o.parent_))
    throw InvalidInput("adding classes from different Ext groups");
  return ExtElement(parent_, coords_ + o.coords_);
}

ExtElement ExtElement::operator-(const ExtElement &o) const {
  return *this + (-o);
}

ExtElement ExtElement::operator-() const {
  return ExtElement(parent_, -coords_);
}

ExtElement operator*(const Integer &k, const ExtElement &x) {
  return ExtElement(x.parent_, k * x.coords_);
}

IntVector ExtElement::representative(Index c_index) const {
  IntVector a = IntVector::Zero(parent_.A().generator_count());
  const auto &comps = parent_.components();
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (comps[k].c_index == c_index)
      a(comps[k].a_target) = coords_(static_cast<Index>(k));
  return a;
}

std::string to_string(const ExtElement &x) {
  if (x.is_zero())
    return "0";
  std::ostringstream out;
  out << "(";
  for (Index k = 0; k < x.coords().size(); ++k)
    out << (k ? ", " : "") << x.coords()(k);
  out << ")";
  return out.str();
}

std::vector<ExtElement> all_elements(const ExtGroup &g) {
  std::vector<ExtElement> out;
  IntVector v = IntVector::Zero(g.size());
  for (;;) {
    out.emplace_back(g, v);
    Index k = 0;
    for (; k < g.size(); ++k) {
      v(k) += 1;
      if (v(k) < g.components()[static_cast<std::size_t>(k)].order)
        break;
      v(k) = 0;
    }
    if (k == g.size())
      return out;
  }
}

ExtGroup ext_group(const FgGroup &c, const FgGroup &a) {
  std::vector<ExtComponent> comps;
  for (Index i = 0; i < c.torsion_count(); ++i) {
    const Integer d = c.generator_order(i);
    for (Index j = 0; j < a.generator_count(); ++j) {
      const bool torsion = j < a.torsion_count();
      Integer n = torsion ? gcd_of(d, a.generator_order(j)) : d;
      if (n > 1)
        comps.push_back({i, j, torsion, n});
    }
  }
  return ExtGroup(c, a, std::move(comps));
}

// ---------------------------------------------------------- ExtTSubgroup

ExtTSubgroup::ExtTSubgroup(ExtGroup parent) : parent_(std::move(parent)) {
  std::vector<Integer> orders;
  const auto &comps = parent_.components();
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (comps[k].torsion_target) {
      members_.push_back(static_cast<Index>(k));
      orders.push_back(comps[k].order);
    }
  structure_ = canonical_sum_of_cyclics(orders);
}

bool ExtTSubgroup::contains(const ExtElement &x) const {
  if (!(x.parent() == parent_))
    throw InvalidInput("class belongs to a different Ext group");
  const auto &comps = parent_.components();
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (!comps[k].torsion_target && x.coords()(static_cast<Index>(k)) != 0)
      return false;
  return true;
}

std::vector<ExtElement> ExtTSubgroup::elements() const {
  std::vector<ExtElement> out;
  for (auto &x : all_elements(parent_))
    if (contains(x))
      out.push_back(std::move(x));
  return out;
}

ExtTSubgroup ext_t_subgroup(const FgGroup &c, const FgGroup &a) {
  return ExtTSubgroup(ext_group(c, a));
}

ExtGroup pext_group(const FgGroup &c, const FgGroup &a) {
  return ExtGroup(c, a, {});
}

FgGroup hom_group(const FgGroup &c, const FgGroup &a) {
  std::vector<Integer> orders;
  Index free_rank = c.free_rank() * a.free_rank();
  // Free generators of C may go anywhere in A.
  for (Index r = 0; r < c.free_rank(); ++r)
    for (const auto &e : a.invariant_factors())
      orders.push_back(e);
  // Torsion generators of C land in tA; free targets contribute nothing.
  for (const auto &d : c.invariant_factors())
    for (const auto &e : a.invariant_factors())
      orders.push_back(gcd_of(d, e));
  FgGroup torsion = canonical_sum_of_cyclics(orders);
  return FgGroup(free_rank, torsion.invariant_factors());
}

// ------------------------------------------------------------ induced maps

ExtElement ExtHom::operator()(const ExtElement &x) const {
  if (!(x.parent() == source))
    throw InvalidInput("class is not in the source of the induced map");
  return ExtElement(target, matrix * x.coords());
}

namespace {

// Coordinates of a in the components of `g` belonging to torsion generator
// i of C, written into column `col` of `out`.
void write_coords(const ExtGroup &g, Index c_index, const IntVector &a,
                  IntMatrix &out, Index col) {
  const auto &comps = g.components();
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (comps[k].c_index == c_index)
      out(static_cast<Index>(k), col) = floor_mod(a(comps[k].a_target),
                                                  comps[k].order);
}

} // namespace

ExtHom induced_pushforward(const Morphism &mu, const FgGroup &c) {
  ExtGroup source = ext_group(c, mu.domain());
  ExtGroup target = ext_group(c, mu.codomain());
  IntMatrix m = IntMatrix::Zero(target.size(), source.size());
  for (Index k = 0; k < source.size(); ++k) {
    const auto &comp = source.components()[static_cast<std::size_t>(k)];
    // Unit class k is represented by the generator a_target of A.
    write_coords(target, comp.c_index, mu.matrix().col(comp.a_target), m, k);
  }
  return {std::move(source), std::move(target), std::move(m)};
}

// For c' of order d' with gamma(c') = sum_i g_i c_i, the pulled-back class
// has representative sum_i (d' g_i / d_i) a_i.
ExtHom induced_pullback(const Morphism &gamma, const FgGroup &a) {
  const FgGroup &c_new = gamma.domain();
  const FgGroup &c_old = gamma.codomain();
  ExtGroup source = ext_group(c_old, a);
  ExtGroup target = ext_group(c_new, a);
  IntMatrix m = IntMatrix::Zero(target.size(), source.size());
  for (Index k = 0; k < source.size(); ++k) {
    const auto &comp = source.components()[static_cast<std::size_t>(k)];
    const Integer d_old = c_old.generator_order(comp.c_index);
    for (Index i = 0; i < c_new.torsion_count(); ++i) {
      const Integer d_new = c_new.generator_order(i);
      const Integer num = d_new * gamma.matrix()(comp.c_index, i);
      // Well-definedness of gamma makes this exact.
      const Integer coef = num / d_old;
      IntVector rep = IntVector::Zero(a.generator_count());
      rep(comp.a_target) = coef;
      IntMatrix col = IntMatrix::Zero(target.size(), 1);
      write_coords(target, i, rep, col, 0);
      m.col(k) += col.col(0);
    }
  }
  for (Index r = 0; r < target.size(); ++r)
    for (Index k = 0; k < m.cols(); ++k)
      m(r, k) = floor_mod(m(r, k),
                          target.components()[static_cast<std::size_t>(r)].order);
  return {std::move(source), std::move(target), std::move(m)};
}

FgGroup ext_t_from_torsion_target(const FgGroup &c, const FgGroup &a) {
  if (!is_torsion(c))
    throw InvalidInput("Ext(C, tA) route needs a torsion C, got " +
                       to_string(c));
  return ext_group(c, torsion_subgroup(a).group).structure();
}

FgGroup ext_t_from_free_quotient(const FgGroup &c, const FgGroup &a) {
  if (!is_torsion_free(a))
    throw InvalidInput("Ext(C/tC, A) route needs a torsion-free A, got " +
                       to_string(a));
  FgGroup quotient = cokernel(torsion_subgroup(c).inclusion).group;
  return ext_group(quotient, a).structure();
}

bool fg_t_projective(const FgGroup &c) { return is_free(c); }

bool fg_t_injective_witness(const FgGroup &a) { return is_torsion_free(a); }

std::optional<ExtElement> t_projectivity_obstruction(const FgGroup &c) {
  if (is_free(c))
    return std::nullopt;
  ExtGroup g = ext_group(c, FgGroup::cyclic(c.invariant_factors().front()));
  // Component (0, 0) has order d_1 >= 2 and targets a torsion generator.
  return ExtElement::unit(g, 0);
}

std::optional<ExtElement> t_injectivity_obstruction(const FgGroup &a) {
  if (is_torsion_free(a))
    return std::nullopt;
  ExtGroup g = ext_group(FgGroup::cyclic(a.invariant_factors().front()), a);
  return ExtElement::unit(g, 0);
}

} // namespace abext
