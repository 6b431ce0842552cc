#pragma once

// Seeded random instances shared by the property suites and tests.

#include "abext/extcalc.hpp"
#include "abext/extension.hpp"
#include "abext/group.hpp"

#include <cstdint>
#include <random>

namespace abext {

using Rng = std::mt19937_64;

struct SampleBounds {
  Index max_free_rank = 2;
  Index max_factors = 3;
  std::int64_t max_factor = 16;
  // Cap on |B| for samples that must stay finite and small.
  std::int64_t max_order = 64;
};

std::int64_t uniform(Rng &rng, std::int64_t lo, std::int64_t hi);

// Canonical form of Z^r + Z/n_1 + ... with every n_i drawn from [2, max_factor].
FgGroup random_group(Rng &rng, const SampleBounds &b = {});
FgGroup random_torsion_group(Rng &rng, const SampleBounds &b = {});
FgGroup random_free_group(Rng &rng, const SampleBounds &b = {});
// Finite group of order at most max_order (possibly trivial).
FgGroup random_finite_group(Rng &rng, std::int64_t max_order,
                            const SampleBounds &b = {});

// Uniform over the well-defined matrices with entries in a small range.
Morphism random_morphism(Rng &rng, const FgGroup &domain,
                         const FgGroup &codomain);

ExtElement random_element(Rng &rng, const ExtGroup &g);
ExtElement random_t_element(Rng &rng, const ExtTSubgroup &t);

// realize_with_offsets with random offsets in [-2, 2].
Extension random_realization(Rng &rng, const ExtElement &x);

} // namespace abext
