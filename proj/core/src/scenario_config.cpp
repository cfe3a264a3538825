#include "coincidence/scenario_config.hpp"

#include "text.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace coincidence {

namespace pt = boost::property_tree;

namespace {

// Known keys per section kind; anything else is a typo worth reporting.
const std::map<std::string, std::set<std::string>, std::less<>> kKeys = {
    {"data", {"onomasticon", "inscriptions", "weights_neutral", "weights_optimistic", "weights_custom"}},
    {"target", {"names", "threshold"}},
    {"anchor", {"primary", "compound"}},
    {"population", {"tombs", "ossuaries", "overrides"}},
    {"freq", {"target", "ratio", "anchor", "tombs"}},
    {"bayes", {"scenarios"}},
    {"prior", {"tombs", "t"}},
    {"rendition", {"p_new_null", "p_new_alt", "interpretations"}},
    {"output", {"format"}},
};

std::vector<std::string> list(std::string_view s) {
    std::vector<std::string> out;
    for (auto item : text::split(s, ','))
        if (!item.empty()) out.emplace_back(item);
    return out;
}

template <class T = std::uint64_t>
T positive(const std::string& section, const std::string& key, std::string_view value) {
    auto v = text::parse_unsigned<T>(value);
    if (!v || *v == 0)
        throw ConfigError("[" + section + "] " + key + ": expected a positive integer, got '" + std::string(value) + "'");
    return *v;
}

Rational rational(const std::string& section, const std::string& key, std::string_view value) {
    try {
        return parse_rational(value);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("[" + section + "] " + key + ": " + e.what());
    }
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view s) {
    s = text::trim(s);
    if (s == "text") return OutputFormat::text;
    if (s == "delimited") return OutputFormat::delimited;
    return std::nullopt;
}

ScenarioConfig parse_scenario_config(std::istream& in, const std::filesystem::path& base_dir) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }

    ScenarioConfig cfg;
    cfg.base_dir = base_dir;
    auto resolve = [&](const std::string& p) { return (base_dir / p).lexically_normal(); };

    struct PendingFreq {
        std::string id, target, ratio, anchor;
        std::optional<std::uint64_t> tombs;
    };
    std::vector<PendingFreq> pending;

    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError("key '" + section + "' appears outside any section");
        const auto colon = section.find(':');
        const std::string kind = section.substr(0, colon);
        const std::string id = colon == std::string::npos ? "" : section.substr(colon + 1);
        auto known = kKeys.find(kind);
        if (known == kKeys.end()) throw ConfigError("unknown section [" + section + "]");
        const bool wants_id = kind == "target" || kind == "anchor" || kind == "freq";
        if (wants_id && id.empty()) throw ConfigError("section [" + kind + "] needs an id, e.g. [" + kind + ":name]");
        if (!wants_id && !id.empty()) throw ConfigError("section [" + kind + "] takes no id");
        for (const auto& [key, value] : body)
            if (!known->second.count(key)) throw ConfigError("unknown key '" + key + "' in [" + section + "]");

        auto get = [&](const std::string& key) -> std::optional<std::string> {
            auto v = body.get_optional<std::string>(key);
            if (v) return std::string(text::trim(*v));
            return std::nullopt;
        };
        auto require = [&](const std::string& key) {
            auto v = get(key);
            if (!v || v->empty()) throw ConfigError("[" + section + "] is missing '" + key + "'");
            return *v;
        };

        if (kind == "data") {
            if (auto v = get("onomasticon")) cfg.onomasticon_path = resolve(*v);
            if (auto v = get("inscriptions")) cfg.inscriptions_path = resolve(*v);
            if (auto v = get("weights_neutral")) cfg.neutral_weights_path = resolve(*v);
            if (auto v = get("weights_optimistic")) cfg.optimistic_weights_path = resolve(*v);
            if (auto v = get("weights_custom"))
                for (const auto& p : list(*v)) cfg.custom_weight_paths.push_back(resolve(p));
        } else if (kind == "target") {
            TargetSetSpec s;
            s.label = id;
            for (const auto& item : list(get("names").value_or(""))) {
                auto slash = item.rfind('/');
                auto g = slash == std::string::npos ? std::nullopt : parse_gender(item.substr(slash + 1));
                if (!g) throw ConfigError("[" + section + "] name '" + item + "' must be written name/m or name/f");
                s.names.push_back({std::string(text::trim(item.substr(0, slash))), *g});
            }
            if (auto v = get("threshold")) s.overlap_threshold = positive<unsigned>(section, "threshold", *v);
            cfg.target_sets.push_back(std::move(s));
        } else if (kind == "anchor") {
            AnchorSpec a;
            a.label = id;
            a.primary_name = require("primary");
            if (auto v = get("compound"); v && !v->empty()) {
                a.mode = AnchorMode::compound;
                a.compound_name = *v;
            }
            cfg.anchors.push_back(std::move(a));
        } else if (kind == "population") {
            if (auto v = get("tombs")) cfg.population.tombs = positive(section, "tombs", *v);
            if (auto v = get("ossuaries")) cfg.population.ossuaries = positive<unsigned>(section, "ossuaries", *v);
            if (auto v = get("overrides")) {
                for (const auto& item : list(*v)) {
                    auto c = item.find(':');
                    auto index = c == std::string::npos ? std::nullopt : text::parse_unsigned(item.substr(0, c));
                    if (!index) throw ConfigError("[population] override '" + item + "' must be index:size");
                    cfg.population.overrides.emplace_back(*index, positive<unsigned>(section, "overrides", item.substr(c + 1)));
                }
            }
        } else if (kind == "freq") {
            PendingFreq f{id, require("target"), get("ratio").value_or("equal"), require("anchor"), std::nullopt};
            if (auto v = get("tombs")) f.tombs = positive(section, "tombs", *v);
            pending.push_back(std::move(f));
        } else if (kind == "bayes") {
            for (const auto& item : list(get("scenarios").value_or(""))) {
                auto s = parse_scenario(item);
                if (!s) throw ConfigError("[bayes] unknown scenario '" + item + "'");
                cfg.bayes_scenarios.push_back(*s);
            }
        } else if (kind == "prior") {
            if (auto v = get("tombs")) cfg.prior.tombs = positive(section, "tombs", *v);
            if (auto v = get("t")) cfg.prior.t = rational(section, "t", *v);
        } else if (kind == "rendition") {
            if (auto v = get("p_new_null")) cfg.rendition.p_new_null = rational(section, "p_new_null", *v);
            if (auto v = get("p_new_alt")) cfg.rendition.p_new_alt = rational(section, "p_new_alt", *v);
            if (auto v = get("interpretations"))
                cfg.rendition.interpretation_count = positive<unsigned>(section, "interpretations", *v);
        } else if (kind == "output") {
            auto f = parse_output_format(get("format").value_or("text"));
            if (!f) throw ConfigError("[output] format must be 'text' or 'delimited'");
            cfg.output_format = *f;
        }
    }

    try {
        cfg.population.validate();
        cfg.prior.validate();
        cfg.rendition.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    for (const auto& f : pending) {
        FreqScenario s;
        auto t = std::find_if(cfg.target_sets.begin(), cfg.target_sets.end(), [&](auto& x) { return x.label == f.target; });
        if (t == cfg.target_sets.end()) throw ConfigError("[freq:" + f.id + "] refers to unknown target '" + f.target + "'");
        auto a = std::find_if(cfg.anchors.begin(), cfg.anchors.end(), [&](auto& x) { return x.label == f.anchor; });
        if (a == cfg.anchors.end()) throw ConfigError("[freq:" + f.id + "] refers to unknown anchor '" + f.anchor + "'");
        auto r = parse_ratio(f.ratio);
        if (!r) throw ConfigError("[freq:" + f.id + "] ratio must be 'equal' or 'empirical'");
        s.targets = *t;
        s.anchor = *a;
        s.ratio = *r;
        s.population = cfg.population;
        if (f.tombs) {
            s.population.tombs = *f.tombs;
            try {
                s.population.validate();
            } catch (const std::invalid_argument& e) {
                throw ConfigError("[freq:" + f.id + "] " + e.what());
            }
        }
        cfg.freq_scenarios.push_back(std::move(s));
    }

    if (!cfg.has_freq_task() && !cfg.has_bayes_task())
        throw ConfigError("config requests no task: add [freq:...] sections or a [bayes] scenario list");
    return cfg;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    return parse_scenario_config(in, path.parent_path());
}

LoadedInputs load_inputs(const ScenarioConfig& cfg) {
    LoadedInputs out;
    auto wrap = [](const std::filesystem::path& p, auto&& fn) {
        try {
            return fn(p.string());
        } catch (const ParseError& e) {
            throw ConfigError(p.string() + ": " + e.what());
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    };
    if (cfg.onomasticon_path) out.onomasticon = wrap(*cfg.onomasticon_path, load_onomasticon_file);
    if (cfg.inscriptions_path) out.inscriptions = wrap(*cfg.inscriptions_path, load_inscriptions_file);
    if (cfg.neutral_weights_path) out.neutral = wrap(*cfg.neutral_weights_path, load_weight_table_file);
    if (cfg.optimistic_weights_path) out.optimistic = wrap(*cfg.optimistic_weights_path, load_weight_table_file);
    for (const auto& p : cfg.custom_weight_paths) out.custom.push_back(wrap(p, load_weight_table_file));

    if (!out.onomasticon) throw ConfigError("[data] onomasticon is required");
    if (cfg.has_bayes_task() && !out.inscriptions) throw ConfigError("Bayesian tasks need [data] inscriptions");
    for (auto s : cfg.bayes_scenarios) {
        if (s == BayesScenario::optimistic && !out.optimistic)
            throw ConfigError("scenario 'optimistic' needs [data] weights_optimistic");
        if (s != BayesScenario::optimistic && !out.neutral)
            throw ConfigError("scenario '" + std::string(scenario_name(s)) + "' needs [data] weights_neutral");
    }
    return out;
}

BayesFixtures make_bayes_fixtures(const ScenarioConfig& cfg, const LoadedInputs& in) {
    if (!in.onomasticon || !in.inscriptions) throw ConfigError("Bayesian tasks need an onomasticon and inscriptions");
    return BayesFixtures{*in.onomasticon, in.neutral.value_or(WeightTable{}), in.optimistic.value_or(WeightTable{}),
                         *in.inscriptions, cfg.prior, cfg.rendition};
}

}  // namespace coincidence
