#include "coincidence/commands.hpp"

#include "text.hpp"

namespace coincidence {

PValueGrid run_freq(const ScenarioConfig& cfg, const LoadedInputs& inputs) {
    if (!inputs.onomasticon) throw ConfigError("frequentist grid needs an onomasticon");
    if (!cfg.has_freq_task()) throw ConfigError("config has no [freq:...] scenarios");
    return run_scenario_grid(*inputs.onomasticon, cfg.freq_scenarios);
}

std::vector<PosteriorResult> run_bayes(const ScenarioConfig& cfg, const LoadedInputs& inputs) {
    if (!cfg.has_bayes_task()) throw ConfigError("config has no Bayesian scenarios or custom weight tables");
    const BayesFixtures fixtures = make_bayes_fixtures(cfg, inputs);
    std::vector<PosteriorResult> out;
    for (auto s : cfg.bayes_scenarios) out.push_back(run_bayes_scenario(s, fixtures));
    for (const auto& table : inputs.custom)
        out.push_back(evaluate_posterior(fixtures.inscriptions, table, fixtures.onomasticon, fixtures.prior, 1));
    return out;
}

std::vector<RenditionPart> parse_rendition_parts(std::string_view s) {
    std::vector<RenditionPart> out;
    for (auto item : text::split(s, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("rendition part must be id=fraction");
        auto id = text::trim(item.substr(0, eq));
        if (id.empty()) throw std::invalid_argument("rendition part needs an id");
        out.push_back({std::string(id), parse_rational(item.substr(eq + 1)), std::nullopt});
    }
    if (out.empty()) throw std::invalid_argument("no rendition parts given");
    return out;
}

std::vector<RrDemoRow> run_rr_demo(const RrDemoOptions& options) {
    auto [space, rel] = rr_demo_broad_fixture();
    std::vector<RrDemoRow> rows;
    rows.push_back({"broad", "A", rr_statistic(space, rel, "A"), rr_pvalue(space, rel, "A")});
    if (!options.split) return rows;

    auto parts = options.parts.value_or(rr_demo_default_parts());
    auto [split_space, split_rel] = split_rendition(space, rel, "A", parts);
    if (!split_space.contains(options.observed))
        throw std::invalid_argument("observed outcome '" + options.observed + "' is not in the split space");
    rows.push_back({"renditions", options.observed, rr_statistic(split_space, split_rel, options.observed),
                    rr_pvalue(split_space, split_rel, options.observed)});
    return rows;
}

std::optional<CheckTarget> parse_check_target(std::string_view s) {
    s = text::trim(s);
    if (s == "freq") return CheckTarget::freq;
    if (s == "draw") return CheckTarget::draw;
    if (s == "alt") return CheckTarget::alt;
    if (s == "all") return CheckTarget::all;
    return std::nullopt;
}

namespace {

CheckRow make_row(std::string target, std::string label, const SimEstimate& est, const Rational& exact,
                  double corrupt) {
    CheckRow row;
    row.target = std::move(target);
    row.label = std::move(label);
    row.estimate = est;
    row.exact = to_double(exact) + corrupt;
    if (corrupt == 0.0) row.exact_rational = exact;
    row.pass = est.agrees_with(row.exact);
    return row;
}

std::vector<std::pair<std::string, const WeightTable*>> tables_of(const LoadedInputs& inputs) {
    std::vector<std::pair<std::string, const WeightTable*>> out;
    if (inputs.neutral) out.emplace_back(inputs.neutral->label, &*inputs.neutral);
    if (inputs.optimistic) out.emplace_back(inputs.optimistic->label, &*inputs.optimistic);
    for (const auto& t : inputs.custom) out.emplace_back(t.label, &t);
    return out;
}

}  // namespace

std::vector<CheckRow> run_checks(const ScenarioConfig& cfg, const LoadedInputs& inputs, const CheckOptions& options) {
    std::vector<CheckRow> rows;
    const bool all = options.target == CheckTarget::all;
    const double corrupt = options.corrupt_exact;

    if (all || options.target == CheckTarget::freq) {
        if (!cfg.has_freq_task()) {
            if (!all) throw ConfigError("check target 'freq' needs [freq:...] scenarios");
        } else {
            const auto& o = *inputs.onomasticon;
            for (const auto& s : cfg.freq_scenarios) {
                PValueRow exact = evaluate_scenario(o, s);
                SimEstimate est = simulate_frequentist(o, s.targets, s.anchor, s.ratio, s.population, options.sim);
                CheckRow row = make_row("freq",
                                        s.targets.label + "/" + std::string(ratio_name(s.ratio)) + "/" + s.anchor.label +
                                            "/N=" + std::to_string(s.population.tombs),
                                        est, 0, corrupt);
                row.exact = exact.p_value + corrupt;
                row.exact_rational.reset();
                row.pass = est.agrees_with(row.exact);
                rows.push_back(std::move(row));
            }
        }
    }

    const auto tables = tables_of(inputs);
    if ((options.target == CheckTarget::draw || options.target == CheckTarget::alt) && (tables.empty() || !inputs.inscriptions))
        throw ConfigError("check targets 'draw' and 'alt' need weight tables and inscriptions");

    if ((all || options.target == CheckTarget::draw) && inputs.inscriptions) {
        for (const auto& [label, table] : tables) {
            for (Gender g : kGenders) {
                const auto k = static_cast<unsigned>(inputs.inscriptions->names(g).size());
                if (k == 0) continue;
                auto exact = weighted_draw_distribution(*table, g, k);
                auto sim = simulate_weighted_draw(*table, g, k, options.sim);
                const std::string prefix = label + "/" + std::string(1, gender_code(g)) + "/k=" + std::to_string(k);
                for (const auto& [set, p] : exact) {
                    auto it = sim.find(set);
                    SimEstimate est = it != sim.end() ? it->second
                                                      : SimEstimate::from_counts(0, options.sim.trials, options.sim.seed);
                    rows.push_back(make_row("draw", prefix + " " + set.to_string(), est, p, corrupt));
                }
                for (const auto& [set, est] : sim)
                    if (!exact.count(set)) rows.push_back(make_row("draw", prefix + " " + set.to_string(), est, 0, corrupt));
            }
        }
    }

    if ((all || options.target == CheckTarget::alt) && inputs.inscriptions) {
        for (const auto& [label, table] : tables) {
            Rational exact = alt_name_likelihood(*inputs.inscriptions, *table, *inputs.onomasticon);
            SimEstimate est = simulate_alt_likelihood(*inputs.inscriptions, *table, *inputs.onomasticon, options.sim);
            rows.push_back(make_row("alt", label, est, exact, corrupt));
        }
    }
    if (rows.empty()) throw ConfigError("nothing to check for this config");
    return rows;
}

}  // namespace coincidence
