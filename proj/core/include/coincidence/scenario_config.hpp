#pragma once

// INI-style scenario files that drive the command-line tool.
//
//   [data]          onomasticon, inscriptions, weights_neutral,
//                   weights_optimistic, weights_custom (comma list)
//   [target:<id>]   names = name/m, name/f, ...; threshold = 3
//   [anchor:<id>]   primary = jesus; compound = joseph (optional)
//   [population]    tombs, ossuaries, overrides = index:size, ...
//   [freq:<id>]     target, ratio, anchor, tombs (optional override)
//   [bayes]         scenarios = neutral, neutral_renditions, optimistic
//   [prior]         tombs, t
//   [rendition]     p_new_null, p_new_alt, interpretations
//   [output]        format = text | delimited
//
// Relative paths resolve against the directory holding the config file.

#include "coincidence/bayesian.hpp"
#include "coincidence/frequentist.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coincidence {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, delimited };

std::optional<OutputFormat> parse_output_format(std::string_view text);

struct ScenarioConfig {
    std::filesystem::path base_dir;

    std::optional<std::filesystem::path> onomasticon_path;
    std::optional<std::filesystem::path> inscriptions_path;
    std::optional<std::filesystem::path> neutral_weights_path;
    std::optional<std::filesystem::path> optimistic_weights_path;
    std::vector<std::filesystem::path> custom_weight_paths;

    std::vector<TargetSetSpec> target_sets;
    std::vector<AnchorSpec> anchors;
    TombPopulation population;
    std::vector<FreqScenario> freq_scenarios;

    std::vector<BayesScenario> bayes_scenarios;
    PriorSpec prior;
    RenditionAdjustment rendition;

    OutputFormat output_format = OutputFormat::text;

    bool has_freq_task() const { return !freq_scenarios.empty(); }
    bool has_bayes_task() const { return !bayes_scenarios.empty() || !custom_weight_paths.empty(); }
};

// Parses and cross-checks references between sections. Does not open the
// data files; see load_inputs. Throws ConfigError.
ScenarioConfig parse_scenario_config(std::istream& in, const std::filesystem::path& base_dir);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

// Every data file a config refers to, parsed.
struct LoadedInputs {
    std::optional<Onomasticon> onomasticon;
    std::optional<TombInscriptions> inscriptions;
    std::optional<WeightTable> neutral;
    std::optional<WeightTable> optimistic;
    std::vector<WeightTable> custom;
};

// Throws ConfigError when a referenced file is missing or malformed, or when
// a requested task lacks its inputs.
LoadedInputs load_inputs(const ScenarioConfig& cfg);

BayesFixtures make_bayes_fixtures(const ScenarioConfig& cfg, const LoadedInputs& inputs);

}  // namespace coincidence
