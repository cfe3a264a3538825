#include "coincidence/weighted_draw.hpp"

#include <stdexcept>
#include <vector>

namespace coincidence {

namespace {

void check_inputs(std::span<const Rational> weights, std::span<const std::size_t> subset) {
    for (const auto& w : weights)
        if (w < 0) throw std::invalid_argument("draw weights must be nonnegative");
    std::vector<bool> used(weights.size(), false);
    for (auto i : subset) {
        if (i >= weights.size()) throw std::invalid_argument("subset index out of range");
        if (used[i]) throw std::invalid_argument("subset index repeated");
        used[i] = true;
    }
    if (subset.size() > 24) throw std::invalid_argument("subset too large for exact enumeration");
}

// Core recursion. `urn_mass` is the mass before any draw, `pool` the
// inexhaustible part of it (zero for plain set draws).
Rational composition(std::span<const Rational> weights, const Rational& urn_mass, const Rational& pool,
                     std::span<const std::size_t> subset, unsigned pool_draws) {
    const std::size_t k = subset.size();
    const std::size_t states = std::size_t{1} << k;
    const std::size_t width = pool_draws + 1;

    // drawn_mass[mask]: total weight of the subset items in mask.
    std::vector<Rational> drawn_mass(states);
    for (std::size_t mask = 1; mask < states; ++mask) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        drawn_mass[mask] = drawn_mass[mask & (mask - 1)] + weights[subset[low]];
    }

    // prob[mask * width + j]: probability of having drawn exactly the items in
    // mask and j pool members, in some order, after popcount(mask) + j draws.
    std::vector<Rational> prob(states * width);
    prob[0] = 1;
    for (std::size_t mask = 0; mask < states; ++mask) {
        const Rational remaining = urn_mass - drawn_mass[mask];
        for (std::size_t j = 0; j < width; ++j) {
            const Rational& here = prob[mask * width + j];
            if (here == 0) continue;
            bool needs_draw = j + 1 < width || mask + 1 < states;
            if (!needs_draw) continue;
            // Only zero-weight items left: no further draw can happen.
            if (remaining == 0) continue;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask & (std::size_t{1} << b)) continue;
                const Rational& w = weights[subset[b]];
                if (w == 0) continue;
                prob[(mask | (std::size_t{1} << b)) * width + j] += here * w / remaining;
            }
            if (j + 1 < width && pool > 0) prob[mask * width + j + 1] += here * pool / remaining;
        }
    }
    return prob[(states - 1) * width + pool_draws];
}

}  // namespace

Rational set_draw_probability(std::span<const Rational> weights, const Rational& total,
                              std::span<const std::size_t> subset) {
    check_inputs(weights, subset);
    Rational sum = 0;
    for (const auto& w : weights) sum += w;
    if (total < sum) throw std::invalid_argument("urn total is smaller than the sum of item weights");
    if (subset.empty()) return 1;
    return composition(weights, total, 0, subset, 0);
}

Rational draw_composition_probability(std::span<const Rational> weights, const Rational& pool_weight,
                                      std::span<const std::size_t> subset, unsigned pool_draws) {
    check_inputs(weights, subset);
    if (pool_weight < 0) throw std::invalid_argument("pool weight must be nonnegative");
    if (pool_draws > 0 && pool_weight == 0) return 0;
    Rational mass = pool_weight;
    for (const auto& w : weights) mass += w;
    return composition(weights, mass, pool_weight, subset, pool_draws);
}

}  // namespace coincidence
