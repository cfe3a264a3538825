#include "coincidence/scenario_config.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace coincidence {
namespace {

using testing::Q;

ScenarioConfig parse(const std::string& text, const std::filesystem::path& base = "/base") {
    std::istringstream in(text);
    return parse_scenario_config(in, base);
}

std::string config_error(const std::string& text) {
    try {
        parse(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

const char* kMinimalFreq = R"(
[data]
onomasticon = ono/x.ono

[target:s]
names = a/m, b/f

[anchor:j]
primary = j

[freq:one]
target = s
anchor = j
)";

TEST(ScenarioConfig, ParsesFullExample) {
    const auto cfg = parse(R"(
; leading comment
[data]
onomasticon = ../ono/x.ono
inscriptions = tomb.ins
weights_neutral = n.wt
weights_optimistic = o.wt
weights_custom = c1.wt, c2.wt

[target:big]
names = mariam/f, joseph/m
threshold = 2

[anchor:jj]
primary = jesus
compound = joseph

[population]
tombs = 50
ossuaries = 5
overrides = 3:2, 7:9

[freq:row]
target = big
ratio = unequal
anchor = jj
tombs = 1000

[bayes]
scenarios = neutral, optimistic

[prior]
tombs = 900
t = 1/2

[rendition]
p_new_null = 1/40
p_new_alt = 0.1
interpretations = 2

[output]
format = delimited
)",
                           "/cfg/dir");
    EXPECT_EQ(*cfg.onomasticon_path, std::filesystem::path("/cfg/ono/x.ono"));
    EXPECT_EQ(*cfg.inscriptions_path, std::filesystem::path("/cfg/dir/tomb.ins"));
    ASSERT_EQ(cfg.custom_weight_paths.size(), 2u);
    ASSERT_EQ(cfg.target_sets.size(), 1u);
    EXPECT_EQ(cfg.target_sets[0].overlap_threshold, 2u);
    EXPECT_EQ(cfg.target_sets[0].names[1].name, "joseph");
    EXPECT_EQ(cfg.anchors[0].mode, AnchorMode::compound);
    EXPECT_EQ(cfg.population.overrides.size(), 2u);
    ASSERT_EQ(cfg.freq_scenarios.size(), 1u);
    EXPECT_EQ(cfg.freq_scenarios[0].ratio, RatioKind::empirical);
    EXPECT_EQ(cfg.freq_scenarios[0].population.tombs, 1000u);
    EXPECT_EQ(cfg.freq_scenarios[0].population.ossuaries, 5u);
    EXPECT_EQ(cfg.bayes_scenarios, (std::vector<BayesScenario>{BayesScenario::neutral, BayesScenario::optimistic}));
    EXPECT_EQ(cfg.prior.tombs, 900u);
    EXPECT_EQ(cfg.prior.t, Q(1, 2));
    EXPECT_EQ(cfg.rendition.p_new_alt, Q(1, 10));
    EXPECT_EQ(cfg.output_format, OutputFormat::delimited);
    EXPECT_TRUE(cfg.has_freq_task());
    EXPECT_TRUE(cfg.has_bayes_task());
}

TEST(ScenarioConfig, Defaults) {
    const auto cfg = parse(kMinimalFreq);
    EXPECT_EQ(cfg.freq_scenarios[0].ratio, RatioKind::equal);
    EXPECT_EQ(cfg.population.tombs, 100u);
    EXPECT_EQ(cfg.population.ossuaries, 6u);
    EXPECT_EQ(cfg.prior.tombs, 1100u);
    EXPECT_EQ(cfg.output_format, OutputFormat::text);
    EXPECT_FALSE(cfg.has_bayes_task());
}

TEST(ScenarioConfig, Rejections) {
    const std::string base(kMinimalFreq);
    EXPECT_NE(config_error("[data]\nonomasticon = x\n"), "");
    EXPECT_NE(config_error(base + "[mystery]\nx = 1\n"), "");
    EXPECT_NE(config_error(base + "[population]\ntomb = 3\n"), "");
    EXPECT_NE(config_error(base + "[population]\ntombs = 0\n"), "");
    EXPECT_NE(config_error(base + "[population]\ntombs = many\n"), "");
    EXPECT_NE(config_error(base + "[population]\noverrides = 3\n"), "");
    EXPECT_NE(config_error(base + "[population]\noverrides = 300:2\n"), "");
    EXPECT_NE(config_error(base + "[target]\nnames = a/m\n"), "");
    EXPECT_NE(config_error(base + "[target:t2]\nnames = a\n"), "");
    EXPECT_NE(config_error(base + "[bayes]\nscenarios = gloomy\n"), "");
    EXPECT_NE(config_error(base + "[prior]\nt = 2\n"), "");
    EXPECT_NE(config_error(base + "[prior]\nt = x\n"), "");
    EXPECT_NE(config_error(base + "[rendition]\np_new_null = 0\n"), "");
    EXPECT_NE(config_error(base + "[output]\nformat = html\n"), "");
    EXPECT_NE(config_error(base + "[freq:two]\ntarget = s\nanchor = nobody\n"), "");
    EXPECT_NE(config_error(base + "[freq:two]\ntarget = nothing\nanchor = j\n"), "");
    EXPECT_NE(config_error(base + "[freq:two]\ntarget = s\nanchor = j\nratio = skewed\n"), "");
    EXPECT_NE(config_error(base + "[freq:two]\nanchor = j\n"), "");
    EXPECT_NE(config_error(base + "[data]\nonomasticon = y\n"), "");
    EXPECT_NE(config_error("x = 1\n" + base), "");
    EXPECT_NE(config_error("[data\n"), "");
}

TEST(ScenarioConfig, MissingFilesAreConfigErrors) {
    EXPECT_THROW(load_scenario_config("/nonexistent/dir/x.cfg"), ConfigError);
    const auto cfg = parse(kMinimalFreq, "/nonexistent");
    EXPECT_THROW(load_inputs(cfg), ConfigError);
}

TEST(ScenarioConfig, ShippedConfigsLoad) {
    for (const char* name : {"reference_freq.cfg", "reference_bayes.cfg", "lr_neutral.cfg", "reference_all.cfg"}) {
        const auto cfg = load_scenario_config(testing::data_dir() / "configs" / name);
        EXPECT_NO_THROW(load_inputs(cfg)) << name;
    }
    const auto all = load_scenario_config(testing::data_dir() / "configs" / "reference_all.cfg");
    EXPECT_EQ(all.freq_scenarios.size(), 7u);
    EXPECT_EQ(all.bayes_scenarios.size(), 3u);
    const auto inputs = load_inputs(all);
    const auto fixtures = make_bayes_fixtures(all, inputs);
    EXPECT_EQ(fixtures.neutral.label, "neutral");
    EXPECT_EQ(fixtures.optimistic.label, "optimistic");
}

TEST(ScenarioConfig, BayesNeedsItsFiles) {
    const std::string text = std::string("[data]\nonomasticon = ") +
                             (testing::data_dir() / "onomasticon" / "ilan_fixture.ono").string() +
                             "\n[bayes]\nscenarios = neutral\n";
    EXPECT_THROW(load_inputs(parse(text, "/")), ConfigError);
}

}  // namespace
}  // namespace coincidence
