#include "coincidence/rr_demo.hpp"

#include <stdexcept>

namespace coincidence {

OutcomeSpace::OutcomeSpace(std::vector<std::string> outcomes, std::vector<Rational> null_probs)
    : outcomes_(std::move(outcomes)), probs_(std::move(null_probs)) {
    if (outcomes_.size() != probs_.size()) throw std::invalid_argument("outcomes and probabilities differ in length");
    std::set<std::string_view> seen;
    Rational sum = 0;
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        if (!seen.insert(outcomes_[i]).second) throw std::invalid_argument("duplicate outcome '" + outcomes_[i] + "'");
        if (probs_[i] < 0) throw std::invalid_argument("negative probability for '" + outcomes_[i] + "'");
        sum += probs_[i];
    }
    if (sum != 1) throw std::invalid_argument("outcome probabilities sum to " + to_string(sum) + ", not 1");
}

bool OutcomeSpace::contains(std::string_view outcome) const {
    for (const auto& o : outcomes_)
        if (o == outcome) return true;
    return false;
}

const Rational& OutcomeSpace::probability(std::string_view outcome) const {
    for (std::size_t i = 0; i < outcomes_.size(); ++i)
        if (outcomes_[i] == outcome) return probs_[i];
    throw std::out_of_range("unknown outcome '" + std::string(outcome) + "'");
}

Rational rr_statistic(const OutcomeSpace& space, const RelevanceSpec& rel, std::string_view outcome) {
    const Rational& p = space.probability(outcome);
    return rel.is_relevant(outcome) ? p : Rational(0);
}

std::optional<Rational> rr_pvalue(const OutcomeSpace& space, const RelevanceSpec& rel, std::string_view observed) {
    Rational threshold = rr_statistic(space, rel, observed);
    if (threshold == 0) return std::nullopt;
    Rational sum = 0;
    for (std::size_t i = 0; i < space.outcomes().size(); ++i) {
        Rational rr = rr_statistic(space, rel, space.outcomes()[i]);
        if (rr > 0 && rr <= threshold) sum += space.null_probs()[i];
    }
    return sum;
}

std::pair<OutcomeSpace, RelevanceSpec> split_rendition(const OutcomeSpace& space, const RelevanceSpec& rel,
                                                       std::string_view parent, const std::vector<RenditionPart>& parts) {
    if (!space.contains(parent)) throw std::out_of_range("unknown outcome '" + std::string(parent) + "'");
    if (parts.empty()) throw std::invalid_argument("a split needs at least one part");
    Rational sum = 0;
    for (const auto& part : parts) {
        if (part.fraction <= 0) throw std::invalid_argument("rendition fractions must be positive");
        sum += part.fraction;
    }
    if (sum != 1) throw std::invalid_argument("rendition fractions sum to " + to_string(sum) + ", not 1");

    const bool parent_relevant = rel.is_relevant(parent);
    std::vector<std::string> outcomes;
    std::vector<Rational> probs;
    RelevanceSpec out_rel;
    for (const auto& r : rel.relevant)
        if (r != parent) out_rel.relevant.insert(r);

    for (std::size_t i = 0; i < space.outcomes().size(); ++i) {
        const auto& name = space.outcomes()[i];
        if (name != parent) {
            outcomes.push_back(name);
            probs.push_back(space.null_probs()[i]);
            continue;
        }
        for (const auto& part : parts) {
            outcomes.push_back(part.id);
            probs.push_back(space.null_probs()[i] * part.fraction);
            if (part.relevant.value_or(parent_relevant)) out_rel.relevant.insert(part.id);
        }
    }
    return {OutcomeSpace(std::move(outcomes), std::move(probs)), std::move(out_rel)};
}

std::pair<OutcomeSpace, RelevanceSpec> rr_demo_broad_fixture() {
    OutcomeSpace space({"A", "B", "C"}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    RelevanceSpec rel{{"A", "B"}};
    return {std::move(space), std::move(rel)};
}

std::vector<RenditionPart> rr_demo_default_parts() {
    return {{"A1", Rational(1, 3), std::nullopt}, {"A2", Rational(2, 3), std::nullopt}};
}

}  // namespace coincidence
