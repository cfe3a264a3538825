#pragma once

// Seeded simulation oracles for the exact computations. Each sampler runs the
// generative story directly (names drawn from the population, persons drawn
// from the weighted urn) and never calls the closed-form routines it checks.

#include "coincidence/bayesian.hpp"
#include "coincidence/frequentist.hpp"
#include "coincidence/onomasticon.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coincidence {

struct SimConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0x5EEDF00Dull;
    // Trials per work unit handed to a thread.
    std::uint64_t batch_size = 1 << 16;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    void validate() const;
};

struct SimEstimate {
    double point = 0.0;
    double standard_error = 0.0;
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    static SimEstimate from_counts(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed);

    // |point - exact| <= sigmas * se, where se is the larger of the plug-in
    // standard error and sqrt(exact * (1 - exact) / trials).
    bool agrees_with(double exact, double sigmas = 3.0) const;
};

// P(at least one of N tombs is interesting), simulated tomb by tomb.
SimEstimate simulate_frequentist(const Onomasticon& o, const TargetSetSpec& s, const AnchorSpec& a, RatioKind ratio,
                                 const TombPopulation& pop, const SimConfig& cfg);

// Outcome of k draws from one gender's roster: the persons drawn (sorted)
// and how many draws came from the "others" pool.
struct DrawnSet {
    std::vector<std::string> persons;
    unsigned others = 0;

    friend auto operator<=>(const DrawnSet&, const DrawnSet&) = default;
    std::string to_string() const;
};

// Empirical distribution of k draws (forced members included in k).
// Throws std::invalid_argument when k draws are infeasible.
std::map<DrawnSet, SimEstimate> simulate_weighted_draw(const WeightTable& w, Gender g, unsigned k,
                                                       const SimConfig& cfg);

// Exact counterpart of simulate_weighted_draw, via draw_composition_probability.
std::map<DrawnSet, Rational> weighted_draw_distribution(const WeightTable& w, Gender g, unsigned k);

// Frequency with which the full alternative generative model reproduces the
// observed name multisets of both genders.
SimEstimate simulate_alt_likelihood(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o,
                                    const SimConfig& cfg);

}  // namespace coincidence
