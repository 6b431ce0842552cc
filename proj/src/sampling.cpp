#include "abext/sampling.hpp"

namespace abext {

std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

namespace {

FgGroup from_parts(Index free_rank, const std::vector<Integer> &orders) {
  const Index k = static_cast<Index>(orders.size());
  IntMatrix rel = IntMatrix::Zero(k + free_rank, k);
  for (Index i = 0; i < k; ++i)
    rel(i, i) = orders[static_cast<std::size_t>(i)];
  return present(k + free_rank, rel).group;
}

std::vector<Integer> random_orders(Rng &rng, const SampleBounds &b) {
  std::vector<Integer> orders;
  const auto k = uniform(rng, 0, b.max_factors);
  for (std::int64_t i = 0; i < k; ++i)
    orders.emplace_back(uniform(rng, 2, b.max_factor));
  return orders;
}

} // namespace

FgGroup random_group(Rng &rng, const SampleBounds &b) {
  const Index r = uniform(rng, 0, b.max_free_rank);
  return from_parts(r, random_orders(rng, b));
}

FgGroup random_torsion_group(Rng &rng, const SampleBounds &b) {
  return from_parts(0, random_orders(rng, b));
}

FgGroup random_free_group(Rng &rng, const SampleBounds &b) {
  return FgGroup::free(uniform(rng, 0, b.max_free_rank));
}

FgGroup random_finite_group(Rng &rng, std::int64_t max_order,
                            const SampleBounds &b) {
  std::vector<Integer> orders;
  std::int64_t remaining = max_order;
  const auto k = uniform(rng, 0, b.max_factors);
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t hi = std::min(b.max_factor, remaining);
    if (hi < 2)
      break;
    const auto n = uniform(rng, 2, hi);
    orders.emplace_back(n);
    remaining /= n;
  }
  return from_parts(0, orders);
}

Morphism random_morphism(Rng &rng, const FgGroup &domain,
                         const FgGroup &codomain) {
  IntMatrix m(codomain.generator_count(), domain.generator_count());
  for (Index j = 0; j < m.rows(); ++j)
    for (Index i = 0; i < m.cols(); ++i) {
      const Integer g = domain.generator_order(i);
      const Integer h = codomain.generator_order(j);
      if (h == 0) {
        m(j, i) = g == 0 ? Integer(uniform(rng, -3, 3)) : Integer(0);
      } else {
        // g * m must vanish mod h: m is a multiple of h / gcd(g, h).
        const Integer step = g == 0 ? Integer(1) : Integer(h / gcd_of(g, h));
        const Integer choices = h / step;
        m(j, i) = step * uniform(rng, 0, choices.convert_to<std::int64_t>() - 1);
      }
    }
  return Morphism(domain, codomain, std::move(m));
}

ExtElement random_element(Rng &rng, const ExtGroup &g) {
  IntVector v(g.size());
  for (Index k = 0; k < g.size(); ++k) {
    const auto n = g.components()[static_cast<std::size_t>(k)].order;
    v(k) = uniform(rng, 0, n.convert_to<std::int64_t>() - 1);
  }
  return ExtElement(g, std::move(v));
}

ExtElement random_t_element(Rng &rng, const ExtTSubgroup &t) {
  const ExtGroup &g = t.parent();
  IntVector v = IntVector::Zero(g.size());
  for (Index k : t.members()) {
    const auto n = g.components()[static_cast<std::size_t>(k)].order;
    v(k) = uniform(rng, 0, n.convert_to<std::int64_t>() - 1);
  }
  return ExtElement(g, std::move(v));
}

Extension random_realization(Rng &rng, const ExtElement &x) {
  const Index na = x.parent().A().generator_count();
  const Index kc = x.parent().C().torsion_count();
  IntMatrix offsets(na, kc);
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < kc; ++j)
      offsets(i, j) = uniform(rng, -2, 2);
  return realize_with_offsets(x, offsets);
}

} // namespace abext
