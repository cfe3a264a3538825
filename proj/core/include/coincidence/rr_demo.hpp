#pragma once

// Single-draw toy model for a rareness-and-relevance statistic: the score of
// an outcome is its null probability when it is relevant to the family and 0
// otherwise, and the p-value sums the null probability of relevant outcomes
// scoring no higher than the observation. Splitting a broad category into
// renditions shrinks that sum even when every rendition stays relevant.

#include "coincidence/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coincidence {

class OutcomeSpace {
public:
    // Probabilities must be nonnegative and sum to exactly 1; outcome ids
    // must be unique. Throws std::invalid_argument otherwise.
    OutcomeSpace(std::vector<std::string> outcomes, std::vector<Rational> null_probs);

    const std::vector<std::string>& outcomes() const { return outcomes_; }
    const std::vector<Rational>& null_probs() const { return probs_; }

    bool contains(std::string_view outcome) const;
    // Throws std::out_of_range for unknown outcomes.
    const Rational& probability(std::string_view outcome) const;

private:
    std::vector<std::string> outcomes_;
    std::vector<Rational> probs_;
};

struct RelevanceSpec {
    std::set<std::string, std::less<>> relevant;

    bool is_relevant(std::string_view outcome) const { return relevant.count(outcome) > 0; }
};

// Null probability of the outcome if relevant, else 0.
Rational rr_statistic(const OutcomeSpace& space, const RelevanceSpec& rel, std::string_view outcome);

// Sum of P0(x) over outcomes x with 0 < RR(x) <= RR(observed). Returns
// std::nullopt when the observation itself is not relevant (RR = 0), which
// is not a probability.
std::optional<Rational> rr_pvalue(const OutcomeSpace& space, const RelevanceSpec& rel, std::string_view observed);

struct RenditionPart {
    std::string id;
    Rational fraction;
    // Inherits the parent's relevance when unset.
    std::optional<bool> relevant;
};

// Replace `parent` with parts carrying parent_prob * fraction, in place.
// Fractions must be positive and sum to 1.
std::pair<OutcomeSpace, RelevanceSpec> split_rendition(const OutcomeSpace& space, const RelevanceSpec& rel,
                                                       std::string_view parent, const std::vector<RenditionPart>& parts);

// The three-name population {A, B, C} at 1/3 each with A and B relevant.
std::pair<OutcomeSpace, RelevanceSpec> rr_demo_broad_fixture();
// A split into A1 (1/3 of A) and A2 (2/3 of A), both relevant.
std::vector<RenditionPart> rr_demo_default_parts();

}  // namespace coincidence
