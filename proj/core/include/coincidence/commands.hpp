#pragma once

// The work behind each CLI subcommand, separated from argument parsing.

#include "coincidence/report.hpp"
#include "coincidence/scenario_config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coincidence {

PValueGrid run_freq(const ScenarioConfig& cfg, const LoadedInputs& inputs);

// Requested preset scenarios first, then one result per custom weight table
// (no rendition adjustment).
std::vector<PosteriorResult> run_bayes(const ScenarioConfig& cfg, const LoadedInputs& inputs);

struct RrDemoOptions {
    bool split = true;
    std::string observed = "A1";
    // Defaults to A1 = 1/3, A2 = 2/3 of A.
    std::optional<std::vector<RenditionPart>> parts;
};

// Parses "A1=1/3,A2=2/3". Throws std::invalid_argument.
std::vector<RenditionPart> parse_rendition_parts(std::string_view text);

// Broad row for the observed category's parent "A", then the split row.
std::vector<RrDemoRow> run_rr_demo(const RrDemoOptions& options);

enum class CheckTarget { freq, draw, alt, all };

std::optional<CheckTarget> parse_check_target(std::string_view text);

struct CheckOptions {
    CheckTarget target = CheckTarget::all;
    SimConfig sim;
    // Test hook: added to every exact value before comparison.
    double corrupt_exact = 0.0;
};

// Throws ConfigError when the config lacks inputs for the selected target.
std::vector<CheckRow> run_checks(const ScenarioConfig& cfg, const LoadedInputs& inputs, const CheckOptions& options);

}  // namespace coincidence
