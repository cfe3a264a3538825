#pragma once

// Multiple-look p-value over many tombs: a tomb is interesting when it holds
// the anchor name plus at least `threshold` companions from the target set,
// and the p-value is the chance that at least one of N tombs is interesting.

#include "coincidence/onomasticon.hpp"
#include "coincidence/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coincidence {

// P(Y >= k) for Y ~ Binomial(n, p), summed term by term.
// Throws std::invalid_argument if p is outside [0, 1].
double binomial_tail(unsigned n, double p, unsigned k);
Rational binomial_tail(unsigned n, const Rational& p, unsigned k);

// P(Y <= k) for the same distribution; used as the complementary route.
Rational binomial_cdf(unsigned n, const Rational& p, unsigned k);

enum class AnchorMode { single_name, compound };

std::string_view anchor_mode_name(AnchorMode m);

// The anchor is always a male name. In compound mode the tomb needs
// "<primary> son of <compound>", modelled as the product of both name
// probabilities.
struct AnchorSpec {
    std::string label;
    AnchorMode mode = AnchorMode::single_name;
    std::string primary_name;
    std::optional<std::string> compound_name;
};

Rational anchor_probability(const Onomasticon& o, const AnchorSpec& a, RatioKind ratio);

// p_anchor * P(Binomial(n - 1, nu) >= threshold). One ossuary holds the
// anchor; the remaining n - 1 draw independently from the population.
double tomb_interest_probability(unsigned n, double nu, double p_anchor, unsigned threshold);
Rational tomb_interest_probability(unsigned n, const Rational& nu, const Rational& p_anchor, unsigned threshold);

// 1 - prod(1 - pi_i), assuming independent tombs.
double multi_tomb_pvalue(std::span<const double> pis);
Rational multi_tomb_pvalue(std::span<const Rational> pis);

struct TombPopulation {
    std::uint64_t tombs = 100;
    unsigned ossuaries = 6;
    // (tomb index, ossuary count) pairs replacing the default size.
    std::vector<std::pair<std::uint64_t, unsigned>> overrides;

    // Throws std::invalid_argument on zero sizes or out-of-range indices.
    void validate() const;
    unsigned ossuaries_of(std::uint64_t tomb) const;
};

struct FreqScenario {
    TargetSetSpec targets;
    RatioKind ratio = RatioKind::equal;
    AnchorSpec anchor;
    TombPopulation population;
};

struct PValueRow {
    std::string variant;
    RatioKind ratio = RatioKind::equal;
    AnchorMode anchor_mode = AnchorMode::single_name;
    std::string anchor_label;
    std::uint64_t tombs = 0;
    unsigned ossuaries = 0;
    Rational nu;
    Rational p_anchor;
    // Per-tomb interest probability at the default ossuary count, exact.
    Rational pi;
    double p_value = 0.0;
};

struct PValueGrid {
    std::vector<PValueRow> rows;
};

PValueRow evaluate_scenario(const Onomasticon& o, const FreqScenario& s);

// One row per scenario, in input order.
PValueGrid run_scenario_grid(const Onomasticon& o, std::span<const FreqScenario> scenarios);

}  // namespace coincidence
