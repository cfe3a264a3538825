#include "coincidence/bayesian.hpp"

#include "coincidence/weighted_draw.hpp"
#include "text.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>

namespace coincidence {

namespace {

using NameCounts = std::map<std::string, unsigned, std::less<>>;

NameCounts tally(const std::vector<std::string>& names) {
    NameCounts out;
    for (const auto& n : names) ++out[n];
    return out;
}

}  // namespace

void PriorSpec::validate() const {
    if (tombs == 0) throw std::invalid_argument("prior needs at least one tomb");
    if (!is_probability(t)) throw std::invalid_argument("prior t must lie in [0, 1]");
    if (t / Rational(Integer(static_cast<unsigned long>(tombs))) >= 1)
        throw std::invalid_argument("prior probability t/N must be below 1");
}

Rational prior_odds(const PriorSpec& prior) {
    prior.validate();
    Rational p = prior.t / Rational(Integer(static_cast<unsigned long>(prior.tombs)));
    return p / (1 - p);
}

void WeightTable::validate() const {
    std::set<std::string> ids;
    for (const auto& p : persons) {
        if (p.person.empty()) throw std::invalid_argument("person id must not be empty");
        if (p.broad_name.empty()) throw std::invalid_argument("person '" + p.person + "' has no broad name");
        if (!ids.insert(p.person).second) throw std::invalid_argument("duplicate person '" + p.person + "'");
        if (!p.weight.is_infinite() && p.weight.value() < 0)
            throw std::invalid_argument("negative weight for '" + p.person + "'");
    }
    if (others_male < 0 || others_female < 0) throw std::invalid_argument("'others' weights must be nonnegative");
}

WeightTable load_weight_table(std::istream& in) {
    WeightTable table;
    std::set<Gender> others_seen;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (text::skippable(raw)) continue;
        auto fields = text::split(text::trim(raw), '|');
        try {
            if (fields.size() == 2 && fields[0] == "label") {
                table.label = std::string(fields[1]);
                continue;
            }
            if (fields[0] == "others") {
                if (fields.size() != 3) throw std::invalid_argument("expected 'others|<m|f>|<weight>'");
                auto g = parse_gender(fields[1]);
                if (!g) throw std::invalid_argument("gender must be 'm' or 'f'");
                if (!others_seen.insert(*g).second) throw std::invalid_argument("'others' given twice for one gender");
                Weight w = Weight::parse(fields[2]);
                if (w.is_infinite()) throw std::invalid_argument("'others' weight must be finite");
                (*g == Gender::male ? table.others_male : table.others_female) = w.value();
                continue;
            }
            if (fields.size() != 4) throw std::invalid_argument("expected '<person>|<m|f>|<broad_name>|<weight>'");
            auto g = parse_gender(fields[1]);
            if (!g) throw std::invalid_argument("gender must be 'm' or 'f'");
            table.persons.push_back({std::string(fields[0]), *g, std::string(fields[2]), Weight::parse(fields[3])});
            table.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return table;
}

WeightTable load_weight_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weight table '" + path + "'");
    return load_weight_table(in);
}

TombInscriptions load_inscriptions(std::istream& in) {
    TombInscriptions out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (text::skippable(raw)) continue;
        auto fields = text::split(text::trim(raw), '|');
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty())
            throw ParseError(line_no, "expected '<broad_name>|<m|f>[|note]'");
        auto g = parse_gender(fields[1]);
        if (!g) throw ParseError(line_no, "gender must be 'm' or 'f'");
        (*g == Gender::male ? out.male_names : out.female_names).emplace_back(fields[0]);
    }
    return out;
}

TombInscriptions load_inscriptions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open inscriptions '" + path + "'");
    return load_inscriptions(in);
}

Rational multiset_probability(const std::vector<std::string>& names, const Onomasticon& o, Gender g) {
    Rational out(factorial(static_cast<unsigned>(names.size())));
    for (const auto& [name, m] : tally(names)) {
        Rational p = o.conditional_probability(name, g);
        if (p == 0) return 0;
        Rational pm;
        mpz_pow_ui(pm.get_num_mpz_t(), p.get_num_mpz_t(), m);
        mpz_pow_ui(pm.get_den_mpz_t(), p.get_den_mpz_t(), m);
        out = out * pm / Rational(factorial(m));
    }
    return out;
}

Rational null_name_likelihood(const TombInscriptions& insc, const Onomasticon& o) {
    return multiset_probability(insc.male_names, o, Gender::male) *
           multiset_probability(insc.female_names, o, Gender::female);
}

Rational alt_name_likelihood(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o, Gender g) {
    w.validate();
    NameCounts remaining = tally(insc.names(g));

    // Forced members take their matching inscription first.
    std::vector<Rational> weights;
    std::vector<const PersonWeight*> finite;
    for (const auto& p : w.persons) {
        if (p.gender != g) continue;
        if (p.weight.is_infinite()) {
            auto it = remaining.find(p.broad_name);
            if (it == remaining.end() || it->second == 0) return 0;
            --it->second;
        } else {
            weights.push_back(p.weight.value());
            finite.push_back(&p);
        }
    }
    unsigned k = 0;
    for (const auto& [name, m] : remaining) k += m;
    if (k == 0) return 1;

    // Only persons with positive weight whose broad name was observed can
    // appear in a matching draw; everyone still contributes urn mass.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < finite.size(); ++i)
        if (weights[i] > 0 && remaining.count(finite[i]->broad_name) && remaining.at(finite[i]->broad_name) > 0)
            candidates.push_back(i);
    if (candidates.size() > 20) throw std::invalid_argument("too many name-compatible persons for exact evaluation");

    const Rational& pool = w.others(g);
    Rational total = 0;
    const std::size_t subsets = std::size_t{1} << candidates.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::size_t> chosen;
        NameCounts residual = remaining;
        bool fits = true;
        for (std::size_t b = 0; b < candidates.size() && fits; ++b) {
            if (!(mask & (std::size_t{1} << b))) continue;
            auto& left = residual[finite[candidates[b]]->broad_name];
            if (left == 0) fits = false;
            else --left;
            chosen.push_back(candidates[b]);
        }
        if (!fits || chosen.size() > k) continue;

        const unsigned pool_draws = k - static_cast<unsigned>(chosen.size());
        if (pool_draws > 0 && pool == 0) continue;

        std::vector<std::string> pool_names;
        for (const auto& [name, m] : residual) pool_names.insert(pool_names.end(), m, name);
        Rational emitted = multiset_probability(pool_names, o, g);
        if (emitted == 0) continue;
        total += draw_composition_probability(weights, pool, chosen, pool_draws) * emitted;
    }
    return total;
}

Rational alt_name_likelihood(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o) {
    Rational male = alt_name_likelihood(insc, w, o, Gender::male);
    if (male == 0) return 0;
    return male * alt_name_likelihood(insc, w, o, Gender::female);
}

void RenditionAdjustment::validate() const {
    if (p_new_null <= 0 || p_new_null > 1) throw std::invalid_argument("p_new_null must lie in (0, 1]");
    if (p_new_alt <= 0 || p_new_alt > 1) throw std::invalid_argument("p_new_alt must lie in (0, 1]");
    if (interpretation_count == 0) throw std::invalid_argument("interpretation count must be positive");
}

Rational rendition_odds_factor(const RenditionAdjustment& r) {
    if (r.p_new_null == 0) throw std::invalid_argument("p_new_null must be positive");
    if (r.p_new_null < 0 || r.p_new_alt < 0) throw std::invalid_argument("rendition probabilities must be nonnegative");
    return r.p_new_alt / r.p_new_null;
}

LikelihoodRatio LikelihoodRatio::of(const Rational& alt, const Rational& null) {
    if (null == 0) {
        if (alt == 0) throw std::invalid_argument("likelihood ratio undefined: both likelihoods are zero");
        return {0, true};
    }
    return {alt / null, false};
}

std::string LikelihoodRatio::to_string() const { return infinite ? "inf" : coincidence::to_string(value); }

PosteriorResult posterior(const PriorSpec& prior, const LikelihoodRatio& lr, const Rational& rendition_factor) {
    if (rendition_factor < 0) throw std::invalid_argument("rendition factor must be nonnegative");
    PosteriorResult out;
    out.prior_odds = prior_odds(prior);
    out.likelihood_ratio = lr;
    out.rendition_factor = rendition_factor;
    if (lr.infinite && out.prior_odds > 0 && rendition_factor > 0) {
        out.odds_infinite = true;
        out.odds = 0;
        out.posterior = 1;
        return out;
    }
    out.odds = lr.infinite ? Rational(0) : out.prior_odds * lr.value * rendition_factor;
    out.posterior = out.odds / (1 + out.odds);
    return out;
}

std::string_view scenario_name(BayesScenario s) {
    switch (s) {
        case BayesScenario::neutral: return "neutral";
        case BayesScenario::neutral_renditions: return "neutral_renditions";
        case BayesScenario::optimistic: return "optimistic";
    }
    return "unknown";
}

std::optional<BayesScenario> parse_scenario(std::string_view text) {
    text = text::trim(text);
    if (text == "neutral") return BayesScenario::neutral;
    if (text == "neutral_renditions") return BayesScenario::neutral_renditions;
    if (text == "optimistic") return BayesScenario::optimistic;
    return std::nullopt;
}

PosteriorResult evaluate_posterior(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o,
                                   const PriorSpec& prior, const Rational& rendition_factor) {
    Rational null = null_name_likelihood(insc, o);
    Rational alt = alt_name_likelihood(insc, w, o);
    PosteriorResult out = posterior(prior, LikelihoodRatio::of(alt, null), rendition_factor);
    out.null_likelihood = std::move(null);
    out.alt_likelihood = std::move(alt);
    out.scenario = w.label;
    return out;
}

PosteriorResult run_bayes_scenario(BayesScenario scenario, const BayesFixtures& f) {
    PosteriorResult out;
    switch (scenario) {
        case BayesScenario::neutral:
            out = evaluate_posterior(f.inscriptions, f.neutral, f.onomasticon, f.prior, 1);
            break;
        case BayesScenario::neutral_renditions:
            f.rendition.validate();
            out = evaluate_posterior(f.inscriptions, f.neutral, f.onomasticon, f.prior, rendition_odds_factor(f.rendition));
            break;
        case BayesScenario::optimistic:
            out = evaluate_posterior(f.inscriptions, f.optimistic, f.onomasticon, f.prior, 1);
            break;
    }
    out.scenario = std::string(scenario_name(scenario));
    return out;
}

}  // namespace coincidence
