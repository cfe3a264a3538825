#include "coincidence/montecarlo.hpp"

#include "coincidence/philox.hpp"
#include "coincidence/weighted_draw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace coincidence {

namespace {

// Runs cfg.trials independent trials. `trial(rng, acc)` folds one trial into
// a per-batch accumulator; batches are merged with `merge(into, from)`.
// Accumulators hold counts, so the result is independent of batching and
// thread count.
template <class Acc, class Trial, class Merge>
Acc run_trials(const SimConfig& cfg, Trial trial, Merge merge) {
    cfg.validate();
    const std::uint64_t batches = (cfg.trials + cfg.batch_size - 1) / cfg.batch_size;
    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));

    std::vector<Acc> partial(batches);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t b = next++; b < batches; b = next++) {
            const std::uint64_t begin = b * cfg.batch_size;
            const std::uint64_t end = std::min(cfg.trials, begin + cfg.batch_size);
            Acc acc{};
            for (std::uint64_t t = begin; t < end; ++t) {
                TrialRng rng(cfg.seed, t);
                trial(rng, acc);
            }
            partial[b] = std::move(acc);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    Acc total{};
    for (auto& p : partial) merge(total, p);
    return total;
}

// Draws names from the population: a gender by share, then a record by
// count, with the unlisted remainder mapping to -1.
class PopulationSampler {
public:
    PopulationSampler(const Onomasticon& o, RatioKind ratio) {
        male_share_ = ratio == RatioKind::equal
                          ? 0.5
                          : static_cast<double>(o.male_total()) / static_cast<double>(o.male_total() + o.female_total());
        for (Gender g : kGenders) {
            auto& side = sides_[index(g)];
            side.total = o.total(g);
            std::uint64_t running = 0;
            for (std::size_t i = 0; i < o.records().size(); ++i) {
                const auto& r = o.records()[i];
                if (r.gender != g || r.count == 0) continue;
                running += r.count;
                side.cumulative.push_back(running);
                side.record.push_back(static_cast<long>(i));
            }
        }
    }

    // Record index drawn from gender g, or -1 for an unlisted name.
    long draw_within(Gender g, TrialRng& rng) const {
        const auto& side = sides_[index(g)];
        auto slot = static_cast<std::uint64_t>(rng.uniform() * static_cast<double>(side.total));
        auto it = std::upper_bound(side.cumulative.begin(), side.cumulative.end(), slot);
        if (it == side.cumulative.end()) return -1;
        return side.record[static_cast<std::size_t>(it - side.cumulative.begin())];
    }

    long draw_mixed(TrialRng& rng) const {
        return draw_within(rng.uniform() < male_share_ ? Gender::male : Gender::female, rng);
    }

    double male_share() const { return male_share_; }

private:
    static std::size_t index(Gender g) { return g == Gender::male ? 0 : 1; }

    struct Side {
        std::uint64_t total = 0;
        std::vector<std::uint64_t> cumulative;
        std::vector<long> record;
    };
    double male_share_ = 0.5;
    Side sides_[2];
};

long record_index(const Onomasticon& o, std::string_view name, Gender g) {
    const auto* r = o.find(name, g);
    return r ? static_cast<long>(r - o.records().data()) : -2;
}

struct Hits {
    std::uint64_t hits = 0;
};

}  // namespace

void SimConfig::validate() const {
    if (trials == 0) throw std::invalid_argument("simulation needs at least one trial");
    if (batch_size == 0) throw std::invalid_argument("batch size must be positive");
}

SimEstimate SimEstimate::from_counts(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
    SimEstimate e;
    e.hits = hits;
    e.trials = trials;
    e.seed = seed;
    e.point = static_cast<double>(hits) / static_cast<double>(trials);
    e.standard_error = std::sqrt(e.point * (1.0 - e.point) / static_cast<double>(trials));
    return e;
}

bool SimEstimate::agrees_with(double exact, double sigmas) const {
    // Runs with no hits (or all hits) have a zero plug-in error, so the
    // binomial error implied by the exact value is used as a floor.
    const double implied = std::sqrt(std::clamp(exact, 0.0, 1.0) * (1.0 - std::clamp(exact, 0.0, 1.0)) /
                                     static_cast<double>(trials));
    const double se = std::max(standard_error, implied);
    if (se == 0.0) return std::abs(point - exact) <= 1e-12;
    return std::abs(point - exact) <= sigmas * se;
}

SimEstimate simulate_frequentist(const Onomasticon& o, const TargetSetSpec& s, const AnchorSpec& a, RatioKind ratio,
                                 const TombPopulation& pop, const SimConfig& cfg) {
    pop.validate();
    if (a.mode == AnchorMode::compound && !a.compound_name)
        throw std::invalid_argument("compound anchor requires a second name");

    const PopulationSampler sampler(o, ratio);
    std::vector<bool> in_target(o.records().size(), false);
    for (const auto& n : s.names)
        if (auto i = record_index(o, n.name, n.gender); i >= 0) in_target[static_cast<std::size_t>(i)] = true;

    const long anchor_record = record_index(o, a.primary_name, Gender::male);
    const long father_record = a.mode == AnchorMode::compound ? record_index(o, *a.compound_name, Gender::male) : -3;
    // Chance that one ossuary draw is the anchor's first name.
    const double anchor_rate =
        anchor_record < 0 ? 0.0
                          : sampler.male_share() * static_cast<double>(o.records()[static_cast<std::size_t>(anchor_record)].count) /
                                static_cast<double>(o.male_total());

    std::unordered_map<std::uint64_t, unsigned> sizes(pop.overrides.begin(), pop.overrides.end());
    const unsigned threshold = s.overlap_threshold;

    auto trial = [&](TrialRng& rng, Hits& acc) {
        if (anchor_rate <= 0.0) return;
        const double log_miss = std::log1p(-anchor_rate);
        std::uint64_t tomb = 0;
        while (true) {
            // Tombs whose anchor ossuary misses the name are skipped in one
            // geometric jump: the gap to the next hit is Geometric(anchor_rate).
            if (anchor_rate < 1.0) {
                const double u = 1.0 - rng.uniform();
                const double gap = std::floor(std::log(u) / log_miss);
                if (gap >= static_cast<double>(pop.tombs - tomb)) return;
                tomb += static_cast<std::uint64_t>(gap);
            }
            // The second name of a compound anchor is another draw from the
            // same mixed-gender population.
            if (father_record != -3) {
                if (sampler.draw_mixed(rng) != father_record) {
                    if (++tomb >= pop.tombs) return;
                    continue;
                }
            }
            auto it = sizes.find(tomb);
            const unsigned n = it == sizes.end() ? pop.ossuaries : it->second;
            unsigned matches = 0;
            for (unsigned j = 1; j < n; ++j) {
                const long r = sampler.draw_mixed(rng);
                if (r >= 0 && in_target[static_cast<std::size_t>(r)]) ++matches;
            }
            if (matches >= threshold) {
                ++acc.hits;
                return;
            }
            if (++tomb >= pop.tombs) return;
        }
    };
    auto merge = [](Hits& into, const Hits& from) { into.hits += from.hits; };
    const Hits total = run_trials<Hits>(cfg, trial, merge);
    return SimEstimate::from_counts(total.hits, cfg.trials, cfg.seed);
}

std::string DrawnSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < persons.size(); ++i) {
        if (i) out += ",";
        out += persons[i];
    }
    if (others) out += (persons.empty() ? "" : ",") + std::string("others x") + std::to_string(others);
    return out + "}";
}

namespace {

struct Roster {
    std::vector<const PersonWeight*> forced;
    std::vector<const PersonWeight*> finite;
    std::vector<double> weights;
    double pool = 0.0;
};

Roster make_roster(const WeightTable& w, Gender g) {
    w.validate();
    Roster r;
    for (const auto& p : w.persons) {
        if (p.gender != g) continue;
        if (p.weight.is_infinite()) {
            r.forced.push_back(&p);
        } else {
            r.finite.push_back(&p);
            r.weights.push_back(to_double(p.weight.value()));
        }
    }
    r.pool = to_double(w.others(g));
    return r;
}

// Performs `draws` weighted draws without replacement (pool never depleted).
// Calls on_person(i) / on_pool() per draw; returns false if the urn empties.
template <class OnPerson, class OnPool>
bool draw_from_roster(const Roster& r, unsigned draws, TrialRng& rng, std::vector<char>& taken, OnPerson on_person,
                      OnPool on_pool) {
    std::fill(taken.begin(), taken.end(), 0);
    double remaining = r.pool;
    for (double w : r.weights) remaining += w;
    for (unsigned d = 0; d < draws; ++d) {
        if (!(remaining > 0.0)) return false;
        double target = rng.uniform() * remaining;
        std::size_t pick = r.weights.size();
        for (std::size_t i = 0; i < r.weights.size(); ++i) {
            if (taken[i] || r.weights[i] <= 0.0) continue;
            if (target < r.weights[i]) {
                pick = i;
                break;
            }
            target -= r.weights[i];
        }
        if (pick == r.weights.size() && r.pool <= 0.0) {
            // Rounding pushed past the last live person; take it.
            for (std::size_t i = r.weights.size(); i-- > 0;)
                if (!taken[i] && r.weights[i] > 0.0) {
                    pick = i;
                    break;
                }
        }
        if (pick < r.weights.size()) {
            taken[pick] = 1;
            remaining -= r.weights[pick];
            on_person(pick);
        } else {
            on_pool();
        }
    }
    return true;
}

unsigned live_capacity(const Roster& r) {
    unsigned n = 0;
    for (double w : r.weights) n += w > 0.0;
    return n;
}

}  // namespace

std::map<DrawnSet, SimEstimate> simulate_weighted_draw(const WeightTable& w, Gender g, unsigned k,
                                                       const SimConfig& cfg) {
    const Roster roster = make_roster(w, g);
    if (roster.forced.size() > k) throw std::invalid_argument("more forced persons than draws");
    const unsigned free_draws = k - static_cast<unsigned>(roster.forced.size());
    if (roster.pool <= 0.0 && free_draws > live_capacity(roster))
        throw std::invalid_argument("not enough positive-weight persons for the requested draws");

    using Counts = std::map<DrawnSet, std::uint64_t>;
    auto trial = [&](TrialRng& rng, Counts& acc) {
        std::vector<char> taken(roster.weights.size());
        DrawnSet out;
        for (const auto* p : roster.forced) out.persons.push_back(p->person);
        draw_from_roster(
            roster, free_draws, rng, taken, [&](std::size_t i) { out.persons.push_back(roster.finite[i]->person); },
            [&] { ++out.others; });
        std::sort(out.persons.begin(), out.persons.end());
        ++acc[out];
    };
    auto merge = [](Counts& into, const Counts& from) {
        for (const auto& [key, n] : from) into[key] += n;
    };
    const Counts counts = run_trials<Counts>(cfg, trial, merge);

    std::map<DrawnSet, SimEstimate> out;
    for (const auto& [key, n] : counts) out.emplace(key, SimEstimate::from_counts(n, cfg.trials, cfg.seed));
    return out;
}

std::map<DrawnSet, Rational> weighted_draw_distribution(const WeightTable& w, Gender g, unsigned k) {
    w.validate();
    std::vector<std::string> forced;
    std::vector<Rational> weights;
    std::vector<std::string> ids;
    for (const auto& p : w.persons) {
        if (p.gender != g) continue;
        if (p.weight.is_infinite()) {
            forced.push_back(p.person);
        } else {
            weights.push_back(p.weight.value());
            ids.push_back(p.person);
        }
    }
    if (forced.size() > k) throw std::invalid_argument("more forced persons than draws");
    const unsigned free_draws = k - static_cast<unsigned>(forced.size());

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 0) live.push_back(i);
    if (live.size() > 20) throw std::invalid_argument("roster too large for exact enumeration");
    const Rational& pool = w.others(g);
    if (pool == 0 && free_draws > live.size())
        throw std::invalid_argument("not enough positive-weight persons for the requested draws");

    std::map<DrawnSet, Rational> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << live.size()); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t b = 0; b < live.size(); ++b)
            if (mask & (std::size_t{1} << b)) chosen.push_back(live[b]);
        if (chosen.size() > free_draws) continue;
        const unsigned pool_draws = free_draws - static_cast<unsigned>(chosen.size());
        Rational p = draw_composition_probability(weights, pool, chosen, pool_draws);
        if (p == 0) continue;
        DrawnSet key;
        key.persons = forced;
        for (auto i : chosen) key.persons.push_back(ids[i]);
        std::sort(key.persons.begin(), key.persons.end());
        key.others = pool_draws;
        out.emplace(std::move(key), std::move(p));
    }
    return out;
}

SimEstimate simulate_alt_likelihood(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o,
                                    const SimConfig& cfg) {
    struct Side {
        Gender gender;
        Roster roster;
        std::vector<std::string> observed;
        bool feasible = true;
    };
    std::vector<Side> sides;
    for (Gender g : kGenders) {
        Side side{g, make_roster(w, g), insc.names(g)};
        std::sort(side.observed.begin(), side.observed.end());
        side.feasible = side.roster.forced.size() <= side.observed.size();
        sides.push_back(std::move(side));
    }
    const PopulationSampler sampler(o, RatioKind::equal);

    auto trial = [&](TrialRng& rng, Hits& acc) {
        for (const auto& side : sides) {
            if (!side.feasible) return;
            std::vector<std::string> names;
            for (const auto* p : side.roster.forced) names.push_back(p->broad_name);
            std::vector<char> taken(side.roster.weights.size());
            const unsigned free_draws = static_cast<unsigned>(side.observed.size() - side.roster.forced.size());
            bool ok = draw_from_roster(
                side.roster, free_draws, rng, taken,
                [&](std::size_t i) { names.push_back(side.roster.finite[i]->broad_name); },
                [&] {
                    const long r = sampler.draw_within(side.gender, rng);
                    names.push_back(r < 0 ? std::string("\x01unlisted") : o.records()[static_cast<std::size_t>(r)].name);
                });
            if (!ok) return;
            std::sort(names.begin(), names.end());
            if (names != side.observed) return;
        }
        ++acc.hits;
    };
    auto merge = [](Hits& into, const Hits& from) { into.hits += from.hits; };
    const Hits total = run_trials<Hits>(cfg, trial, merge);
    return SimEstimate::from_counts(total.hits, cfg.trials, cfg.seed);
}

}  // namespace coincidence
