#pragma once

// Brute-force oracles and random generators shared by the test binaries.
// None of these call into the code under test.

#include "coincidence/bayesian.hpp"
#include "coincidence/frequentist.hpp"
#include "coincidence/onomasticon.hpp"
#include "coincidence/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace coincidence::testing {

// Canonical a/b; mpq_class(a, b) leaves the fraction unreduced.
inline Rational Q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline std::filesystem::path data_dir() { return COINCIDENCE_TEST_DATA_DIR; }

inline Onomasticon fixture_onomasticon() {
    return load_onomasticon_file((data_dir() / "onomasticon" / "ilan_fixture.ono").string());
}

inline TargetSetSpec small_targets() {
    return {"small",
            {{"joseph", Gender::male},
             {"james", Gender::male},
             {"unattributed_target_m", Gender::male},
             {"mariam", Gender::female},
             {"salome", Gender::female}}};
}

inline TargetSetSpec big_targets() {
    TargetSetSpec s = small_targets();
    s.label = "big";
    s.names.push_back({"martha", Gender::female});
    s.names.push_back({"joanna", Gender::female});
    return s;
}

inline AnchorSpec jesus_anchor() { return {"jesus", AnchorMode::single_name, "jesus", std::nullopt}; }

inline AnchorSpec jesus_son_of_joseph_anchor() {
    return {"jesus_son_of_joseph", AnchorMode::compound, "jesus", std::string("joseph")};
}

// P(Y >= k) for Y ~ Binomial(n, p), by summing over all 2^n outcome sequences.
inline Rational oracle_binomial_tail(unsigned n, const Rational& p, unsigned k) {
    Rational sum = 0;
    for (std::uint32_t seq = 0; seq < (1u << n); ++seq) {
        unsigned hits = 0;
        Rational prob = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (seq & (1u << i)) {
                ++hits;
                prob *= p;
            } else {
                prob *= 1 - p;
            }
        }
        if (hits >= k) sum += prob;
    }
    return sum;
}

// Draw |subset| items one at a time without replacement from the listed items
// plus one lumped remainder item of mass total - sum(weights); accept when the
// drawn set equals the subset.
inline Rational oracle_set_draw(const std::vector<Rational>& weights, const Rational& total,
                                const std::vector<std::size_t>& subset) {
    std::vector<Rational> items = weights;
    Rational sum = 0;
    for (const auto& w : weights) sum += w;
    const bool has_rest = total > sum;
    if (has_rest) items.push_back(total - sum);
    std::vector<bool> want(items.size(), false);
    for (auto i : subset) want[i] = true;

    std::vector<bool> taken(items.size(), false);
    auto rec = [&](auto&& self, std::size_t left, const Rational& mass) -> Rational {
        if (left == 0) {
            for (std::size_t i = 0; i < items.size(); ++i)
                if (taken[i] != want[i]) return 0;
            return 1;
        }
        if (mass == 0) return 0;
        Rational acc = 0;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (taken[i] || items[i] == 0) continue;
            taken[i] = true;
            acc += items[i] / mass * self(self, left - 1, mass - items[i]);
            taken[i] = false;
        }
        return acc;
    };
    Rational mass = has_rest ? total : sum;
    return rec(rec, subset.size(), mass);
}

// Probability that a draw of |subset| + pool_draws takes exactly the subset
// items and pool_draws pool members, with the pool never depleted.
inline Rational oracle_composition(const std::vector<Rational>& weights, const Rational& pool,
                                   const std::vector<std::size_t>& subset, unsigned pool_draws) {
    std::vector<bool> want(weights.size(), false);
    for (auto i : subset) want[i] = true;
    std::vector<bool> taken(weights.size(), false);
    auto rec = [&](auto&& self, std::size_t left, unsigned pool_taken, const Rational& listed_mass) -> Rational {
        if (left == 0) {
            if (pool_taken != pool_draws) return 0;
            for (std::size_t i = 0; i < weights.size(); ++i)
                if (taken[i] != want[i]) return 0;
            return 1;
        }
        const Rational mass = listed_mass + pool;
        if (mass == 0) return 0;
        Rational acc = 0;
        if (pool > 0) acc += pool / mass * self(self, left - 1, pool_taken + 1, listed_mass);
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (taken[i] || weights[i] == 0) continue;
            taken[i] = true;
            acc += weights[i] / mass * self(self, left - 1, pool_taken, listed_mass - weights[i]);
            taken[i] = false;
        }
        return acc;
    };
    Rational listed = 0;
    for (const auto& w : weights) listed += w;
    return rec(rec, subset.size() + pool_draws, 0, listed);
}

// Probability that independent draws from a categorical distribution produce
// the given multiset: number of distinct orderings times one ordering's mass.
inline Rational oracle_multiset(std::vector<std::string> names, const Onomasticon& o, Gender g) {
    if (names.empty()) return 1;
    std::sort(names.begin(), names.end());
    Rational one = 1;
    for (const auto& n : names) one *= Q(static_cast<long>(o.count(n, g)), static_cast<long>(o.total(g)));
    std::uint64_t orderings = 0;
    do {
        ++orderings;
    } while (std::next_permutation(names.begin(), names.end()));
    return one * Rational(orderings);
}

// Sequential-draw model of the alternative likelihood for one gender: forced
// members enter first, then the remaining draws come one at a time from
// finite-weight persons (without replacement) and the inexhaustible others
// pool. Each complete sequence is scored by the chance its names equal the
// observed multiset.
inline Rational oracle_alt(const TombInscriptions& insc, const WeightTable& w, const Onomasticon& o, Gender g) {
    std::vector<std::string> observed = insc.names(g);
    std::vector<const PersonWeight*> finite;
    std::vector<std::string> forced_names;
    for (const auto& p : w.persons) {
        if (p.gender != g) continue;
        if (p.weight.is_infinite()) forced_names.push_back(p.broad_name);
        else finite.push_back(&p);
    }
    if (forced_names.size() > observed.size()) return 0;
    const std::size_t draws = observed.size() - forced_names.size();

    auto score = [&](const std::vector<std::string>& person_names, unsigned others) -> Rational {
        std::multiset<std::string> left(observed.begin(), observed.end());
        for (const auto& n : forced_names) {
            auto it = left.find(n);
            if (it == left.end()) return 0;
            left.erase(it);
        }
        for (const auto& n : person_names) {
            auto it = left.find(n);
            if (it == left.end()) return 0;
            left.erase(it);
        }
        if (left.size() != others) return 0;
        return oracle_multiset({left.begin(), left.end()}, o, g);
    };

    const Rational& pool = w.others(g);
    std::vector<bool> taken(finite.size(), false);
    std::vector<std::string> drawn;
    auto rec = [&](auto&& self, std::size_t left, unsigned others, const Rational& listed_mass) -> Rational {
        if (left == 0) return score(drawn, others);
        const Rational mass = listed_mass + pool;
        if (mass == 0) return 0;
        Rational acc = 0;
        if (pool > 0) acc += pool / mass * self(self, left - 1, others + 1, listed_mass);
        for (std::size_t i = 0; i < finite.size(); ++i) {
            const Rational& wi = finite[i]->weight.value();
            if (taken[i] || wi == 0) continue;
            taken[i] = true;
            drawn.push_back(finite[i]->broad_name);
            acc += wi / mass * self(self, left - 1, others, listed_mass - wi);
            drawn.pop_back();
            taken[i] = false;
        }
        return acc;
    };
    Rational listed = 0;
    for (const auto* p : finite) listed += p->weight.value();
    return rec(rec, draws, 0, listed);
}

// Small positive or zero rationals for randomized cases.
inline Rational random_weight(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(allow_zero ? 0 : 1, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return Q(num(rng), den(rng));
}

inline Rational random_probability(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 40);
    const int d = den(rng);
    std::uniform_int_distribution<int> num(0, d);
    return Q(num(rng), d);
}

}  // namespace coincidence::testing
