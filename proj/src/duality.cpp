#include "abext/duality.hpp"

#include <functional>

namespace abext {

CyclicFraction::CyclicFraction(const Integer &numerator,
                               const Integer &denominator) {
  if (denominator <= 0)
    throw InvalidInput("CyclicFraction: denominator must be positive");
  Integer n = floor_mod(numerator, denominator);
  Integer g = gcd_of(n, denominator);
  if (n == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    num_ = n / g;
    den_ = denominator / g;
  }
}

CyclicFraction CyclicFraction::operator+(const CyclicFraction &o) const {
  Integer den = lcm_of(den_, o.den_);
  return {num_ * (den / den_) + o.num_ * (den / o.den_), den};
}

CyclicFraction CyclicFraction::operator-() const { return {-num_, den_}; }

CyclicFraction CyclicFraction::operator-(const CyclicFraction &o) const {
  return *this + -o;
}

CyclicFraction operator*(const Integer &k, const CyclicFraction &f) {
  return {k * f.num_, f.den_};
}

std::string to_string(const CyclicFraction &f) {
  if (f.is_zero())
    return "0";
  return f.numerator().str() + "/" + f.denominator().str();
}

namespace {

void require_finite(const FgGroup &g, const char *what) {
  if (g.free_rank() != 0)
    throw UnsupportedInput(std::string(what) + ": " + to_string(g) +
                           " is infinite; its dual is not discrete");
}

void for_each_element(const FgGroup &g,
                      const std::function<void(const IntVector &)> &fn) {
  const Index n = g.torsion_count();
  IntVector x = IntVector::Zero(n);
  for (;;) {
    fn(x);
    Index i = 0;
    for (; i < n; ++i) {
      x(i) += 1;
      if (x(i) < g.generator_order(i))
        break;
      x(i) = 0;
    }
    if (i == n)
      return;
  }
}

} // namespace

DualGroup::DualGroup(FgGroup g) : base_(std::move(g)) {
  require_finite(base_, "dual_group");
}

CyclicFraction DualGroup::pair(const IntVector &x, const IntVector &chi) const {
  if (x.size() != base_.generator_count() || chi.size() != base_.generator_count())
    throw InvalidInput("pairing: coordinate vector has the wrong length");
  const Integer e = exponent(base_);
  Integer num = 0;
  for (Index i = 0; i < x.size(); ++i)
    num += x(i) * chi(i) * (e / base_.generator_order(i));
  return {num, e};
}

IntVector
DualGroup::character_from_values(const std::vector<CyclicFraction> &values) const {
  if (static_cast<Index>(values.size()) != base_.generator_count())
    throw InvalidInput("character: one value per generator expected");
  IntVector chi(base_.generator_count());
  for (Index i = 0; i < chi.size(); ++i) {
    const auto &v = values[static_cast<std::size_t>(i)];
    const Integer d = base_.generator_order(i);
    if (d % v.denominator() != 0)
      throw InvalidInput("character: value " + to_string(v) +
                         " is not killed by the generator order " + d.str());
    chi(i) = v.numerator() * (d / v.denominator());
  }
  return chi;
}

bool DualGroup::is_nondegenerate() const {
  bool ok = true;
  for_each_element(base_, [&](const IntVector &x) {
    if (!ok || x.isZero())
      return;
    bool seen = false;
    for_each_element(base_, [&](const IntVector &chi) {
      if (!seen && !pair(x, chi).is_zero())
        seen = true;
    });
    ok = seen;
  });
  // The pairing is symmetric in its coordinate formula, so one direction
  // covers both.
  return ok;
}

DualGroup dual_group(const FgGroup &g) { return DualGroup(g); }

Morphism dual_morphism(const Morphism &f) {
  const FgGroup &g = f.domain();
  const FgGroup &h = f.codomain();
  require_finite(g, "dual_morphism");
  require_finite(h, "dual_morphism");
  IntMatrix m(g.generator_count(), h.generator_count());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = g.generator_order(i) * f.matrix()(j, i) / h.generator_order(j);
  return Morphism(h, g, std::move(m));
}

Extension dual_extension(const Extension &e) {
  require_finite(e.B(), "dual_extension");
  return Extension(dual_morphism(e.psi()), dual_morphism(e.phi()));
}

Morphism evaluation_map(const FgGroup &g) {
  DualGroup dual(g);
  DualGroup double_dual(dual.carrier());
  const Index n = g.generator_count();
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    IntVector x = IntVector::Zero(n);
    x(i) = 1;
    std::vector<CyclicFraction> values;
    for (Index j = 0; j < n; ++j) {
      IntVector chi = IntVector::Zero(n);
      chi(j) = 1;
      values.push_back(dual.pair(x, chi));
    }
    m.col(i) = double_dual.character_from_values(values);
  }
  return Morphism(g, double_dual.carrier(), std::move(m));
}

bool is_adjoint(const Morphism &f, const Morphism &f_hat) {
  DualGroup dg(f.domain());
  DualGroup dh(f.codomain());
  if (!(f_hat.domain() == dh.carrier()) || !(f_hat.codomain() == dg.carrier()))
    return false;
  bool ok = true;
  for_each_element(f.domain(), [&](const IntVector &x) {
    if (!ok)
      return;
    IntVector fx = f.apply(x);
    for_each_element(f.codomain(), [&](const IntVector &chi) {
      if (ok && !(dh.pair(fx, chi) == dg.pair(x, f_hat.apply(chi))))
        ok = false;
    });
  });
  return ok;
}

bool double_dual_matches(const Extension &e) {
  Extension dd = dual_extension(dual_extension(e));
  Morphism ev_a = evaluation_map(e.A());
  Morphism ev_b = evaluation_map(e.B());
  Morphism ev_c = evaluation_map(e.C());
  if (!is_isomorphism(ev_a) || !is_isomorphism(ev_b) || !is_isomorphism(ev_c))
    return false;
  bool ok = true;
  for_each_element(e.A(), [&](const IntVector &a) {
    if (ok && ev_b.apply(e.phi().apply(a)) != dd.phi().apply(ev_a.apply(a)))
      ok = false;
  });
  for_each_element(e.B(), [&](const IntVector &b) {
    if (ok && ev_c.apply(e.psi().apply(b)) != dd.psi().apply(ev_b.apply(b)))
      ok = false;
  });
  return ok;
}

} // namespace abext
