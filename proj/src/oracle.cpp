#include "abext/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>

namespace abext::oracle {

namespace {

std::int64_t to_i64(const Integer &x) { return x.convert_to<std::int64_t>(); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_finite(const FgGroup &g, const char *what) {
  if (!is_torsion(g))
    throw UnsupportedInput(std::string(what) + " must be finite, got " +
                           to_string(g));
}

void require_cap(const FgGroup &g, std::int64_t cap, const char *what) {
  require_finite(g, what);
  if (*order(g) > cap)
    throw ResourceLimit(std::string(what) + " has order " + order(g)->str() +
                        ", above the cap " + std::to_string(cap));
}

} // namespace

// ----------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(const FgGroup &g) {
  require_finite(g, "group");
  for (const auto &d : g.invariant_factors()) {
    factors_.push_back(to_i64(d));
    size_ *= factors_.back();
  }
}

std::vector<std::int64_t> FiniteGroup::decode(std::int64_t index) const {
  std::vector<std::int64_t> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c[i] = index % factors_[i];
    index /= factors_[i];
  }
  return c;
}

std::int64_t FiniteGroup::encode(const std::vector<std::int64_t> &coords) const {
  std::int64_t index = 0;
  for (std::size_t i = factors_.size(); i-- > 0;)
    index = index * factors_[i] + mod(coords[i], factors_[i]);
  return index;
}

std::int64_t FiniteGroup::add(std::int64_t x, std::int64_t y) const {
  std::int64_t out = 0, scale = 1;
  for (auto f : factors_) {
    out += ((x % f + y % f) % f) * scale;
    x /= f;
    y /= f;
    scale *= f;
  }
  return out;
}

std::int64_t FiniteGroup::negate(std::int64_t x) const {
  auto c = decode(x);
  for (auto &v : c)
    v = -v;
  return encode(c);
}

std::int64_t FiniteGroup::order_of(std::int64_t x) const {
  std::int64_t n = 1;
  for (std::int64_t y = x; y != 0; y = add(y, x))
    ++n;
  return n;
}

std::int64_t FiniteGroup::generator(std::size_t i) const {
  std::vector<std::int64_t> c(factors_.size(), 0);
  c[i] = 1;
  return encode(c);
}

// --------------------------------------------------------------- Cocycle

std::int64_t Cocycle::at(std::int64_t x, std::int64_t y) const {
  return table[static_cast<std::size_t>(x * c_order + y)];
}

bool Cocycle::is_normalized() const {
  FiniteGroup cg(C);
  for (std::int64_t x = 0; x < cg.size(); ++x)
    if (at(0, x) != 0 || at(x, 0) != 0)
      return false;
  return true;
}

bool Cocycle::is_symmetric() const {
  FiniteGroup cg(C);
  for (std::int64_t x = 0; x < cg.size(); ++x)
    for (std::int64_t y = 0; y < x; ++y)
      if (at(x, y) != at(y, x))
        return false;
  return true;
}

bool Cocycle::satisfies_cocycle_identity() const {
  FiniteGroup cg(C), ag(A);
  for (std::int64_t x = 0; x < cg.size(); ++x)
    for (std::int64_t y = 0; y < cg.size(); ++y)
      for (std::int64_t z = 0; z < cg.size(); ++z) {
        auto lhs = ag.add(at(x, y), at(cg.add(x, y), z));
        auto rhs = ag.add(at(y, z), at(x, cg.add(y, z)));
        if (lhs != rhs)
          return false;
      }
  return true;
}

Cocycle Cocycle::operator+(const Cocycle &o) const {
  if (!(C == o.C) || !(A == o.A))
    throw InvalidInput("adding cocycles over different groups");
  FiniteGroup ag(A);
  Cocycle out{C, A, c_order, table};
  for (std::size_t i = 0; i < table.size(); ++i)
    out.table[i] = ag.add(table[i], o.table[i]);
  return out;
}

// ------------------------------------------------------- ExtensionCensus

// Cocycles with values in Z/e, as vectors over the unknowns f(x, y) with
// 0 < x <= y. With U M V = D the SNF of the cocycle conditions, the cocycle
// lattice (mod e) has basis W = V diag(s), s_i = e / gcd(d_i, e).
struct ExtensionCensus::Block {
  std::int64_t e = 0;
  std::vector<Integer> scale;       // s_i
  IntMatrix quotient_rows;          // rows of U2 for the kept summands
  std::vector<std::int64_t> orders; // kept summand orders
  std::vector<std::vector<std::int64_t>> generators; // cocycle vectors mod e
  std::vector<std::vector<std::int64_t>> pivots;     // echelon basis of B + eZ^u

  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
    for (std::size_t p = 0; p < v.size(); ++p) {
      const auto &h = pivots[p];
      std::int64_t q = v[p] / h[p];
      if (v[p] % h[p] < 0)
        --q;
      if (q != 0)
        for (std::size_t k = p; k < v.size(); ++k)
          v[k] = mod(v[k] - q * h[k], e);
    }
    return v;
  }
};

namespace {

// Echelon basis of span(gens) + e Z^u, reduced mod e; pivot p has its first
// nonzero entry at coordinate p, dividing e.
std::vector<std::vector<std::int64_t>>
echelon_mod(std::vector<std::vector<std::int64_t>> gens, std::size_t u,
            std::int64_t e) {
  std::vector<std::vector<std::int64_t>> pivots(u);
  for (std::size_t p = 0; p < u; ++p) {
    std::vector<std::int64_t> h(u, 0);
    h[p] = e;
    for (auto &g : gens) {
      if (g[p] == 0)
        continue;
      auto [gg, x, y] = extended_gcd(h[p], g[p]);
      const std::int64_t hp = h[p] / gg, gp = g[p] / gg;
      std::vector<std::int64_t> nh(u), ng(u);
      for (std::size_t k = p; k < u; ++k) {
        nh[k] = x * h[k] + y * g[k];
        ng[k] = gp * h[k] - hp * g[k];
      }
      for (std::size_t k = p + 1; k < u; ++k) {
        nh[k] = mod(nh[k], e);
        ng[k] = mod(ng[k], e);
      }
      h = std::move(nh);
      g = std::move(ng);
    }
    pivots[p] = std::move(h);
  }
  return pivots;
}

// Rows spanning the same lattice as `rows`, in echelon form; at most u of them.
IntMatrix row_echelon(const std::set<std::vector<int>> &rows, std::size_t u) {
  std::vector<std::optional<std::vector<Integer>>> pivots(u);
  for (const auto &source : rows) {
    std::vector<Integer> r(source.begin(), source.end());
    for (std::size_t p = 0; p < u; ++p) {
      if (r[p] == 0)
        continue;
      if (!pivots[p]) {
        pivots[p] = std::move(r);
        break;
      }
      auto &h = *pivots[p];
      auto [g, x, y] = extended_gcd(h[p], r[p]);
      const Integer hp = h[p] / g, rp = r[p] / g;
      for (std::size_t k = p; k < u; ++k) {
        Integer nh = x * h[k] + y * r[k];
        r[k] = rp * h[k] - hp * r[k];
        h[k] = std::move(nh);
      }
    }
  }
  std::vector<const std::vector<Integer> *> kept;
  for (const auto &p : pivots)
    if (p)
      kept.push_back(&*p);
  IntMatrix out(static_cast<Index>(kept.size()), static_cast<Index>(u));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t k = 0; k < u; ++k)
      out(static_cast<Index>(i), static_cast<Index>(k)) = (*kept[i])[k];
  return out;
}

} // namespace

ExtensionCensus::ExtensionCensus(const FgGroup &c, const FgGroup &a,
                                 const Caps &caps)
    : c_(c), a_(a), cg_((require_cap(c, caps.max_c_order, "C"), c)),
      ag_((require_cap(a, caps.max_a_order, "A"), a)) {
  const std::int64_t n = cg_.size();
  std::map<std::pair<std::int64_t, std::int64_t>, Index> var;
  for (std::int64_t x = 1; x < n; ++x)
    for (std::int64_t y = x; y < n; ++y) {
      var[{x, y}] = static_cast<Index>(unknowns_.size());
      unknowns_.emplace_back(x, y);
    }
  const Index u = static_cast<Index>(unknowns_.size());
  auto term = [&](std::vector<int> &row, std::int64_t x, std::int64_t y,
                  int sign) {
    if (x == 0 || y == 0)
      return;
    row[static_cast<std::size_t>(var.at({std::min(x, y), std::max(x, y)}))] += sign;
  };
  // f(x,y) + f(x+y,z) - f(y,z) - f(x,y+z) = 0
  std::set<std::vector<int>> rows;
  for (std::int64_t x = 1; x < n; ++x)
    for (std::int64_t y = 1; y < n; ++y)
      for (std::int64_t z = 1; z < n; ++z) {
        std::vector<int> row(static_cast<std::size_t>(u), 0);
        term(row, x, y, 1);
        term(row, cg_.add(x, y), z, 1);
        term(row, y, z, -1);
        term(row, x, cg_.add(y, z), -1);
        if (std::any_of(row.begin(), row.end(), [](int v) { return v != 0; }))
          rows.insert(std::move(row));
      }
  auto snf = smith_normal_form(row_echelon(rows, static_cast<std::size_t>(u)));
  v_inv_ = snf.V_inv;

  // Coboundaries of the indicator functions of nonzero c.
  IntMatrix coboundaries = IntMatrix::Zero(u, std::max<std::int64_t>(n - 1, 0));
  for (std::int64_t g = 1; g < n; ++g)
    for (Index k = 0; k < u; ++k) {
      auto [x, y] = unknowns_[static_cast<std::size_t>(k)];
      int v = (x == g) + (y == g) - (cg_.add(x, y) == g);
      coboundaries(k, g - 1) = v;
    }

  for (auto e : ag_.factors()) {
    auto block = std::make_shared<Block>();
    block->e = e;
    const Integer big_e = e;
    block->scale.resize(static_cast<std::size_t>(u), Integer(1));
    for (Index i = 0; i < snf.rank; ++i)
      block->scale[static_cast<std::size_t>(i)] = big_e / gcd_of(snf.D(i, i), big_e);

    IntMatrix span(u, coboundaries.cols() + u);
    span << coboundaries, IntMatrix::Identity(u, u) * big_e;
    IntMatrix in_basis = snf.V_inv * span;
    for (Index i = 0; i < u; ++i)
      for (Index k = 0; k < in_basis.cols(); ++k)
        in_basis(i, k) /= block->scale[static_cast<std::size_t>(i)];
    auto q = smith_normal_form(in_basis);
    std::vector<Index> kept;
    for (Index i = 0; i < u; ++i)
      if (q.D(i, i) != 1)
        kept.push_back(i);
    block->quotient_rows.resize(static_cast<Index>(kept.size()), u);
    IntMatrix w = snf.V;
    for (Index i = 0; i < u; ++i)
      w.col(i) *= block->scale[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < kept.size(); ++t) {
      const Index i = kept[t];
      block->quotient_rows.row(static_cast<Index>(t)) = q.U.row(i);
      block->orders.push_back(to_i64(q.D(i, i)));
      IntVector gen = w * q.U_inv.col(i);
      std::vector<std::int64_t> g(static_cast<std::size_t>(u));
      for (Index k = 0; k < u; ++k)
        g[static_cast<std::size_t>(k)] = to_i64(floor_mod(gen(k), big_e));
      block->generators.push_back(std::move(g));
      radix_.push_back(block->orders.back());
    }
    std::vector<std::vector<std::int64_t>> cob;
    for (Index g = 0; g < coboundaries.cols(); ++g) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(u));
      for (Index k = 0; k < u; ++k)
        v[static_cast<std::size_t>(k)] = mod(to_i64(coboundaries(k, g)), e);
      cob.push_back(std::move(v));
    }
    block->pivots = echelon_mod(std::move(cob), static_cast<std::size_t>(u), e);
    blocks_.push_back(std::move(block));
  }

  // Enumerate classes in mixed radix order.
  std::size_t total = 1;
  for (auto o : radix_)
    total *= static_cast<std::size_t>(o);
  classes_.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rest = index;
    std::size_t summand = 0;
    std::vector<std::vector<std::int64_t>> values; // per block, per unknown
    for (const auto &b : blocks_) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(u), 0);
      for (std::size_t t = 0; t < b->orders.size(); ++t, ++summand) {
        const auto o = static_cast<std::size_t>(radix_[summand]);
        const auto k = static_cast<std::int64_t>(rest % o);
        rest /= o;
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = mod(v[j] + k * b->generators[t][j], b->e);
      }
      values.push_back(b->reduce(std::move(v)));
    }
    Cocycle f{c_, a_, n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
    for (Index k = 0; k < u; ++k) {
      auto [x, y] = unknowns_[static_cast<std::size_t>(k)];
      std::vector<std::int64_t> coords;
      for (const auto &v : values)
        coords.push_back(v[static_cast<std::size_t>(k)]);
      const auto elem = ag_.encode(coords);
      f.table[static_cast<std::size_t>(x * n + y)] = elem;
      f.table[static_cast<std::size_t>(y * n + x)] = elem;
    }
    classes_.push_back({std::move(f), index});
  }
}

IntVector ExtensionCensus::block_vector(const Cocycle &f,
                                        std::size_t factor) const {
  IntVector v(static_cast<Index>(unknowns_.size()));
  for (std::size_t k = 0; k < unknowns_.size(); ++k) {
    auto [x, y] = unknowns_[k];
    v(static_cast<Index>(k)) = ag_.decode(f.at(x, y))[factor];
  }
  return v;
}

// Coordinates of a cocycle vector in the block's cyclic summands: move to
// the W basis, then apply the quotient rows of the second SNF.
std::vector<Integer> ExtensionCensus::block_coords(const Block &b,
                                                  const IntVector &v) const {
  IntVector z = v_inv_ * v;
  for (Index i = 0; i < z.size(); ++i) {
    const Integer &s = b.scale[static_cast<std::size_t>(i)];
    if (z(i) % s != 0)
      throw InvalidInput("table violates the cocycle conditions");
    z(i) /= s;
  }
  IntVector q = b.quotient_rows * z;
  std::vector<Integer> out;
  for (std::size_t t = 0; t < b.orders.size(); ++t)
    out.push_back(floor_mod(q(static_cast<Index>(t)), Integer(b.orders[t])));
  return out;
}

std::size_t ExtensionCensus::class_of(const Cocycle &f) const {
  if (!(f.C == c_) || !(f.A == a_))
    throw InvalidInput("cocycle is over different groups than the census");
  if (!f.is_valid())
    throw InvalidInput("not a normalized symmetric cocycle");
  std::size_t index = 0, scale = 1, summand = 0;
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    for (const auto &k : block_coords(*blocks_[j], block_vector(f, j))) {
      index += k.convert_to<std::size_t>() * scale;
      scale *= static_cast<std::size_t>(radix_[summand++]);
    }
  return index;
}

std::size_t ExtensionCensus::add(std::size_t i, std::size_t j) const {
  std::size_t out = 0, scale = 1;
  for (auto o : radix_) {
    const auto oo = static_cast<std::size_t>(o);
    out += ((i % oo + j % oo) % oo) * scale;
    i /= oo;
    j /= oo;
    scale *= oo;
  }
  return out;
}

std::vector<OracleClass> enumerate_classes(const FgGroup &c, const FgGroup &a,
                                           const Caps &caps) {
  return ExtensionCensus(c, a, caps).classes();
}

// ------------------------------------------------ extensions from cocycles

// Generators alpha_j = (a_j, 0) and sigma_i = (0, c_i); relations e_j alpha_j
// and d_i sigma_i = sum_{t=1}^{d_i-1} f(t c_i, c_i). The presented group maps
// onto A x C and both have order |A||C|.
Extension cocycle_to_extension(const Cocycle &f) {
  FiniteGroup cg(f.C), ag(f.A);
  const Index na = static_cast<Index>(ag.rank());
  const Index nc = static_cast<Index>(cg.rank());
  IntMatrix rel = IntMatrix::Zero(na + nc, na + nc);
  for (Index j = 0; j < na; ++j)
    rel(j, j) = ag.factors()[static_cast<std::size_t>(j)];
  for (Index i = 0; i < nc; ++i) {
    const auto gen = cg.generator(static_cast<std::size_t>(i));
    const auto d = cg.factors()[static_cast<std::size_t>(i)];
    std::int64_t sum = 0, multiple = gen;
    for (std::int64_t t = 1; t < d; ++t) {
      sum = ag.add(sum, f.at(multiple, gen));
      multiple = cg.add(multiple, gen);
    }
    auto coords = ag.decode(sum);
    for (Index j = 0; j < na; ++j)
      rel(j, na + i) = -coords[static_cast<std::size_t>(j)];
    rel(na + i, na + i) = d;
  }
  auto p = present(na + nc, rel);
  Morphism phi(f.A, p.group, p.projection.matrix().leftCols(na));
  IntMatrix psi_pres = IntMatrix::Zero(nc, na + nc);
  psi_pres.rightCols(nc) = IntMatrix::Identity(nc, nc);
  Morphism psi(p.group, f.C, psi_pres * p.lift);
  return Extension(std::move(phi), std::move(psi));
}

bool exhaustive_is_t_extension(const Cocycle &f) {
  FiniteGroup cg(f.C), ag(f.A);
  const std::int64_t nb = ag.size() * cg.size();
  auto add = [&](std::int64_t p, std::int64_t q) {
    const auto a1 = p % ag.size(), c1 = p / ag.size();
    const auto a2 = q % ag.size(), c2 = q / ag.size();
    return ag.add(ag.add(a1, a2), f.at(c1, c2)) + ag.size() * cg.add(c1, c2);
  };
  // Finite order: some multiple returns to zero within |B| steps.
  std::vector<bool> torsion(static_cast<std::size_t>(nb), false);
  for (std::int64_t b = 0; b < nb; ++b) {
    std::int64_t y = b;
    for (std::int64_t k = 0; k < nb && !torsion[static_cast<std::size_t>(b)]; ++k) {
      if (y == 0)
        torsion[static_cast<std::size_t>(b)] = true;
      y = add(y, b);
    }
  }
  // psi : tB -> tC onto, and ker(psi) cap tB = phi(tA).
  for (std::int64_t c = 0; c < cg.size(); ++c) {
    bool hit = false;
    for (std::int64_t a = 0; a < ag.size() && !hit; ++a)
      hit = torsion[static_cast<std::size_t>(a + ag.size() * c)];
    if (!hit)
      return false;
  }
  for (std::int64_t a = 0; a < ag.size(); ++a)
    if (!torsion[static_cast<std::size_t>(a)])
      return false;
  return true;
}

std::set<std::size_t> oracle_t_classes(const FgGroup &c, const FgGroup &a,
                                       const Caps &caps) {
  std::set<std::size_t> out;
  for (const auto &cls : enumerate_classes(c, a, caps))
    if (exhaustive_is_t_extension(cls.representative))
      out.insert(cls.index);
  return out;
}

// ------------------------------------------------------- equivalence search

namespace {

struct FiniteMap {
  const FiniteGroup *dom;
  const FiniteGroup *cod;
  std::vector<std::int64_t> images; // image of each domain generator

  std::int64_t operator()(std::int64_t x) const {
    auto c = dom->decode(x);
    std::int64_t out = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::int64_t t = 0; t < c[k]; ++t)
        out = cod->add(out, images[k]);
    return out;
  }
};

FiniteMap finite_map(const Morphism &f, const FiniteGroup &dom,
                     const FiniteGroup &cod) {
  FiniteMap m{&dom, &cod, {}};
  for (Index k = 0; k < f.matrix().cols(); ++k) {
    std::vector<std::int64_t> c;
    for (Index r = 0; r < f.matrix().rows(); ++r)
      c.push_back(to_i64(f.matrix()(r, k)));
    m.images.push_back(cod.encode(c));
  }
  return m;
}

} // namespace

bool oracle_equivalent(const Extension &e1, const Extension &e2,
                       const Caps &caps) {
  if (!(e1.A() == e2.A()) || !(e1.C() == e2.C()))
    throw InvalidInput("oracle_equivalent: different end groups");
  require_cap(e1.B(), caps.max_middle_order, "B1");
  require_cap(e2.B(), caps.max_middle_order, "B2");
  FiniteGroup ga(e1.A()), gb1(e1.B()), gb2(e2.B()), gc(e1.C());
  if (gb1.size() != gb2.size())
    return false;
  auto phi1 = finite_map(e1.phi(), ga, gb1);
  auto phi2 = finite_map(e2.phi(), ga, gb2);
  auto psi1 = finite_map(e1.psi(), gb1, gc);
  auto psi2 = finite_map(e2.psi(), gb2, gc);

  std::vector<std::vector<std::int64_t>> candidates(gb1.rank());
  for (std::size_t k = 0; k < gb1.rank(); ++k) {
    const auto g = gb1.generator(k);
    const auto target = psi1(g);
    const auto ord = gb1.factors()[k];
    for (std::int64_t y = 0; y < gb2.size(); ++y)
      if (psi2(y) == target && ord % gb2.order_of(y) == 0)
        candidates[k].push_back(y);
    if (candidates[k].empty())
      return false;
  }
  std::vector<std::size_t> pick(gb1.rank(), 0);
  for (;;) {
    FiniteMap beta{&gb1, &gb2, {}};
    for (std::size_t k = 0; k < pick.size(); ++k)
      beta.images.push_back(candidates[k][pick[k]]);
    bool ok = true;
    for (std::size_t j = 0; j < ga.rank() && ok; ++j) {
      const auto a = ga.generator(j);
      ok = beta(phi1(a)) == phi2(a);
    }
    if (ok) {
      std::vector<bool> seen(static_cast<std::size_t>(gb2.size()), false);
      for (std::int64_t x = 0; x < gb1.size() && ok; ++x) {
        const auto y = static_cast<std::size_t>(beta(x));
        ok = !seen[y];
        seen[y] = true;
      }
      if (ok)
        return true;
    }
    std::size_t k = 0;
    for (; k < pick.size(); ++k) {
      if (++pick[k] < candidates[k].size())
        break;
      pick[k] = 0;
    }
    if (k == pick.size())
      return false;
  }
}

std::int64_t brute_force_hom_count(const FgGroup &c, const FgGroup &a) {
  FiniteGroup gc(c), ga(a);
  std::int64_t count = 0;
  std::vector<std::int64_t> images(gc.rank(), 0);
  for (;;) {
    bool ok = true;
    for (std::size_t k = 0; k < images.size() && ok; ++k) {
      std::int64_t y = 0;
      for (std::int64_t t = 0; t < gc.factors()[k]; ++t)
        y = ga.add(y, images[k]);
      ok = y == 0;
    }
    count += ok;
    std::size_t k = 0;
    for (; k < images.size(); ++k) {
      if (++images[k] < ga.size())
        break;
      images[k] = 0;
    }
    if (k == images.size())
      return count;
  }
}

} // namespace abext::oracle
