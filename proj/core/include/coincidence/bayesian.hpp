#pragma once

// Posterior probability that a tomb belongs to a hypothesized family.
//
// The null draws each gender's broad names i.i.d. from the onomasticon and
// treats the name list as unordered. The alternative draws persons from a
// weighted family roster without replacement; infinite weights are forced
// members, and a lumped "others" pool (never depleted) stands for unlisted
// relatives, whose names come from the onomasticon. Configuration and
// genealogy terms are identical under both hypotheses and never computed.

#include "coincidence/onomasticon.hpp"
#include "coincidence/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coincidence {

struct PriorSpec {
    std::uint64_t tombs = 1100;
    // Prior probability that the family has a tomb at all.
    Rational t = 1;

    void validate() const;
};

// (t/N) / (1 - t/N). Throws std::invalid_argument when t/N >= 1.
Rational prior_odds(const PriorSpec& prior);

struct PersonWeight {
    std::string person;
    Gender gender = Gender::male;
    std::string broad_name;
    Weight weight;
};

struct WeightTable {
    std::string label = "custom";
    std::vector<PersonWeight> persons;
    Rational others_male = 0;
    Rational others_female = 0;

    const Rational& others(Gender g) const { return g == Gender::male ? others_male : others_female; }

    // Unique person ids, nonnegative "others" weights.
    void validate() const;
};

// person|<m|f>|<broad_name>|<weight>   weight: p/q, decimal, integer, or inf
// others|<m|f>|<weight>
// label|<neutral|optimistic|custom>    (optional)
WeightTable load_weight_table(std::istream& in);
WeightTable load_weight_table_file(const std::string& path);

struct TombInscriptions {
    std::vector<std::string> male_names;
    std::vector<std::string> female_names;

    const std::vector<std::string>& names(Gender g) const { return g == Gender::male ? male_names : female_names; }
};

// One inscription per line: <broad_name>|<m|f>[|free-text note]
TombInscriptions load_inscriptions(std::istream& in);
TombInscriptions load_inscriptions_file(const std::string& path);

// Probability of an unordered multiset under i.i.d. draws from the
// gender-conditional onomasticon: (k! / prod m_c!) * prod p_c^m_c.
Rational multiset_probability(const std::vector<std::string>& names, const Onomasticon& o, Gender g);

Rational null_name_likelihood(const TombInscriptions& insc, const Onomasticon& o);

// Alternative likelihood for one gender's inscriptions.
Rational alt_name_likelihood(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o, Gender g);
// Product over both genders.
Rational alt_name_likelihood(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o);

struct RenditionAdjustment {
    Rational p_new_null{1, 80};
    Rational p_new_alt{1, 10};
    // Roster members the special rendition could refer to; reported only.
    unsigned interpretation_count = 3;

    void validate() const;
};

// p_new_alt / p_new_null. Throws std::invalid_argument when p_new_null is 0.
Rational rendition_odds_factor(const RenditionAdjustment& r);

// Nonnegative, or infinite when the null likelihood is zero and the
// alternative is not.
struct LikelihoodRatio {
    Rational value = 1;
    bool infinite = false;

    // Throws std::invalid_argument when both likelihoods are zero.
    static LikelihoodRatio of(const Rational& alt, const Rational& null);
    std::string to_string() const;
};

struct PosteriorResult {
    std::string scenario = "custom";
    Rational prior_odds;
    Rational null_likelihood;
    Rational alt_likelihood;
    LikelihoodRatio likelihood_ratio;
    Rational rendition_factor = 1;
    // Posterior odds; meaningless when odds_infinite.
    Rational odds;
    bool odds_infinite = false;
    Rational posterior;

    double posterior_value() const { return to_double(posterior); }
};

// odds = prior_odds * lr * factor, posterior = odds / (1 + odds).
// Likelihood fields are left at zero; run_bayes_scenario fills them.
PosteriorResult posterior(const PriorSpec& prior, const LikelihoodRatio& lr, const Rational& rendition_factor);

enum class BayesScenario { neutral, neutral_renditions, optimistic };

std::string_view scenario_name(BayesScenario s);
std::optional<BayesScenario> parse_scenario(std::string_view text);

struct BayesFixtures {
    Onomasticon onomasticon;
    WeightTable neutral;
    WeightTable optimistic;
    TombInscriptions inscriptions;
    PriorSpec prior;
    RenditionAdjustment rendition;
};

PosteriorResult evaluate_posterior(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o,
                                   const PriorSpec& prior, const Rational& rendition_factor);

PosteriorResult run_bayes_scenario(BayesScenario scenario, const BayesFixtures& fixtures);

}  // namespace coincidence
