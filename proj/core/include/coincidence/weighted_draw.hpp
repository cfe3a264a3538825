#pragma once

// Exact probabilities for successive weighted sampling without replacement
// (each draw picks a remaining item with probability proportional to its
// weight). Evaluated by dynamic programming over subsets of the drawn items,
// so cost is 2^|subset| rather than |subset|!.

#include "coincidence/rational.hpp"

#include <cstddef>
#include <span>

namespace coincidence {

// Probability that |subset| draws from an urn of mass `total` produce exactly
// the listed items in `subset`, in any order. `total` may exceed the sum of
// `weights`; the excess stands for unlisted items. A draw from an urn with
// no mass left has probability 0. Throws std::invalid_argument on negative
// weights, bad indices, or total below the weight sum.
Rational set_draw_probability(std::span<const Rational> weights, const Rational& total,
                              std::span<const std::size_t> subset);

// Same process with an additional inexhaustible pool of mass `pool_weight`
// (drawing from it never depletes it). Probability that
// |subset| + pool_draws draws yield exactly the items in `subset` plus
// `pool_draws` pool draws, in any order. Item masses are depleted as drawn.
Rational draw_composition_probability(std::span<const Rational> weights, const Rational& pool_weight,
                                      std::span<const std::size_t> subset, unsigned pool_draws);

}  // namespace coincidence
