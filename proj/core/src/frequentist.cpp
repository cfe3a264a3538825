#include "coincidence/frequentist.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace coincidence {

namespace {

void require_probability(double p, const char* what) {
    if (!is_probability(p)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

void require_probability(const Rational& p, const char* what) {
    if (!is_probability(p)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

Rational pow(const Rational& base, unsigned e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

Rational binomial_term(unsigned n, const Rational& p, unsigned j) {
    return Rational(binomial_coefficient(n, j)) * pow(p, j) * pow(Rational(1 - p), n - j);
}

}  // namespace

double binomial_tail(unsigned n, double p, unsigned k) {
    require_probability(p, "binomial probability");
    if (k == 0) return 1.0;
    if (k > n) return 0.0;
    double sum = 0.0;
    for (unsigned j = k; j <= n; ++j) {
        sum += binomial_coefficient(n, j).get_d() * std::pow(p, j) * std::pow(1.0 - p, n - j);
    }
    return std::min(sum, 1.0);
}

Rational binomial_tail(unsigned n, const Rational& p, unsigned k) {
    require_probability(p, "binomial probability");
    if (k == 0) return 1;
    if (k > n) return 0;
    Rational sum = 0;
    for (unsigned j = k; j <= n; ++j) sum += binomial_term(n, p, j);
    return sum;
}

Rational binomial_cdf(unsigned n, const Rational& p, unsigned k) {
    require_probability(p, "binomial probability");
    Rational sum = 0;
    for (unsigned j = 0; j <= std::min(k, n); ++j) sum += binomial_term(n, p, j);
    return sum;
}

std::string_view anchor_mode_name(AnchorMode m) { return m == AnchorMode::single_name ? "single" : "compound"; }

Rational anchor_probability(const Onomasticon& o, const AnchorSpec& a, RatioKind ratio) {
    Rational p = name_probability(o, a.primary_name, Gender::male, ratio);
    if (a.mode == AnchorMode::compound) {
        if (!a.compound_name) throw std::invalid_argument("compound anchor requires a second name");
        p *= name_probability(o, *a.compound_name, Gender::male, ratio);
    }
    return p;
}

double tomb_interest_probability(unsigned n, double nu, double p_anchor, unsigned threshold) {
    if (n == 0) throw std::invalid_argument("a tomb needs at least one ossuary");
    require_probability(p_anchor, "anchor probability");
    return p_anchor * binomial_tail(n - 1, nu, threshold);
}

Rational tomb_interest_probability(unsigned n, const Rational& nu, const Rational& p_anchor, unsigned threshold) {
    if (n == 0) throw std::invalid_argument("a tomb needs at least one ossuary");
    require_probability(p_anchor, "anchor probability");
    return p_anchor * binomial_tail(n - 1, nu, threshold);
}

double multi_tomb_pvalue(std::span<const double> pis) {
    // Sum of log(1 - pi) keeps precision when pi is tiny and N is large.
    double log_none = 0.0;
    for (double pi : pis) {
        require_probability(pi, "tomb probability");
        if (pi == 1.0) return 1.0;
        log_none += std::log1p(-pi);
    }
    return -std::expm1(log_none);
}

Rational multi_tomb_pvalue(std::span<const Rational> pis) {
    Rational none = 1;
    for (const auto& pi : pis) {
        require_probability(pi, "tomb probability");
        none *= 1 - pi;
    }
    return 1 - none;
}

void TombPopulation::validate() const {
    if (tombs == 0) throw std::invalid_argument("population needs at least one tomb");
    if (ossuaries == 0) throw std::invalid_argument("tombs need at least one ossuary");
    std::set<std::uint64_t> seen;
    for (const auto& [index, n] : overrides) {
        if (!seen.insert(index).second) throw std::invalid_argument("duplicate ossuary override for tomb " + std::to_string(index));
        if (index >= tombs) throw std::invalid_argument("ossuary override for tomb " + std::to_string(index) + " is out of range");
        if (n == 0) throw std::invalid_argument("ossuary override must be at least 1");
    }
}

unsigned TombPopulation::ossuaries_of(std::uint64_t tomb) const {
    unsigned n = ossuaries;
    for (const auto& [index, size] : overrides)
        if (index == tomb) n = size;
    return n;
}

PValueRow evaluate_scenario(const Onomasticon& o, const FreqScenario& s) {
    s.population.validate();
    if (s.targets.overlap_threshold == 0) throw std::invalid_argument("overlap threshold must be at least 1");

    PValueRow row;
    row.variant = s.targets.label;
    row.ratio = s.ratio;
    row.anchor_mode = s.anchor.mode;
    row.anchor_label = s.anchor.label;
    row.tombs = s.population.tombs;
    row.ossuaries = s.population.ossuaries;
    row.nu = target_set_nu(o, s.targets, s.ratio);
    row.p_anchor = anchor_probability(o, s.anchor, s.ratio);
    row.pi = tomb_interest_probability(s.population.ossuaries, row.nu, row.p_anchor, s.targets.overlap_threshold);

    // Distinct tomb sizes share one exact evaluation; the product runs in
    // log space over the counts of each size.
    std::map<unsigned, std::uint64_t> sizes;
    sizes[s.population.ossuaries] = s.population.tombs;
    for (const auto& [index, n] : s.population.overrides) {
        (void)index;
        --sizes[s.population.ossuaries];
        ++sizes[n];
    }
    double log_none = 0.0;
    for (const auto& [n, count] : sizes) {
        if (count == 0) continue;
        double pi = to_double(tomb_interest_probability(n, row.nu, row.p_anchor, s.targets.overlap_threshold));
        if (pi >= 1.0) {
            log_none = -INFINITY;
            break;
        }
        log_none += static_cast<double>(count) * std::log1p(-pi);
    }
    row.p_value = -std::expm1(log_none);
    return row;
}

PValueGrid run_scenario_grid(const Onomasticon& o, std::span<const FreqScenario> scenarios) {
    PValueGrid grid;
    grid.rows.reserve(scenarios.size());
    for (const auto& s : scenarios) grid.rows.push_back(evaluate_scenario(o, s));
    return grid;
}

}  // namespace coincidence
