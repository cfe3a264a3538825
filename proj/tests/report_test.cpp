#include "coincidence/commands.hpp"
#include "coincidence/report.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace coincidence {
namespace {

using testing::Q;

struct Loaded {
    ScenarioConfig cfg;
    LoadedInputs inputs;
};

Loaded load(const char* name) {
    Loaded l{load_scenario_config(testing::data_dir() / "configs" / name), {}};
    l.inputs = load_inputs(l.cfg);
    return l;
}

std::vector<std::string> data_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    return rows;
}

TEST(Formatting, SignificantFigures) {
    EXPECT_EQ(format_sig(0.3928935), "0.393");
    EXPECT_EQ(format_sig(0.0139123), "0.0139");
    EXPECT_EQ(format_sig(0.0), "0");
    EXPECT_EQ(format_full(0.5), "0.5");
}

TEST(Commands, FrequentistGridRendering) {
    auto l = load("reference_freq.cfg");
    const auto grid = run_freq(l.cfg, l.inputs);
    ASSERT_EQ(grid.rows.size(), 7u);
    std::ostringstream text, delim;
    render_grid(text, grid, OutputFormat::text);
    render_grid(delim, grid, OutputFormat::delimited);
    EXPECT_NE(text.str().find("0.393"), std::string::npos);
    const auto rows = data_rows(delim.str());
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0].rfind("freq|big|equal|single|jesus|100|6|", 0), 0u);
    EXPECT_NE(rows[0].find("|282118/795353|"), std::string::npos);
}

TEST(Commands, BayesRendersExactIntermediates) {
    auto l = load("lr_neutral.cfg");
    const auto results = run_bayes(l.cfg, l.inputs);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_EQ(results[0].posterior, Q(1, 1100));
    std::ostringstream delim;
    render_posteriors(delim, results, OutputFormat::delimited);
    const auto rows = data_rows(delim.str());
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NE(rows[0].find("|1/1100|"), std::string::npos);
    std::ostringstream text;
    render_posteriors(text, results, OutputFormat::text);
    EXPECT_NE(text.str().find("1/1100"), std::string::npos);
}

TEST(Commands, BayesPresetsInOrder) {
    auto l = load("reference_bayes.cfg");
    const auto results = run_bayes(l.cfg, l.inputs);
    ASSERT_EQ(results.size(), 3u);
    EXPECT_EQ(results[0].scenario, "neutral");
    EXPECT_EQ(results[1].scenario, "neutral_renditions");
    EXPECT_EQ(results[2].scenario, "optimistic");
}

TEST(Commands, RrDemo) {
    const auto rows = run_rr_demo({});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].p_value, Q(2, 3));
    EXPECT_EQ(rows[1].p_value, Q(1, 9));
    const auto broad = run_rr_demo({false, "A1", std::nullopt});
    ASSERT_EQ(broad.size(), 1u);
    EXPECT_EQ(broad[0].p_value, Q(2, 3));
    const auto halves = run_rr_demo({true, "A1", parse_rendition_parts("A1=1/2, A2=1/2")});
    EXPECT_EQ(halves[1].p_value, Q(1, 3));
    std::ostringstream out;
    render_rr_demo(out, rows, OutputFormat::delimited);
    EXPECT_NE(out.str().find("rr|broad|A|1/3|2/3|"), std::string::npos);
    EXPECT_NE(out.str().find("rr|renditions|A1|1/9|1/9|"), std::string::npos);
}

TEST(Commands, RenditionPartsParsing) {
    const auto parts = parse_rendition_parts("X=1/4,Y=3/4");
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].id, "X");
    EXPECT_EQ(parts[1].fraction, Q(3, 4));
    EXPECT_THROW(parse_rendition_parts("X"), std::invalid_argument);
    EXPECT_THROW(parse_rendition_parts("X=a"), std::invalid_argument);
    EXPECT_THROW(run_rr_demo({true, "A1", parse_rendition_parts("A1=1/2,A2=1/3")}), std::invalid_argument);
}

TEST(Commands, CheckTargets) {
    EXPECT_EQ(parse_check_target("draw"), CheckTarget::draw);
    EXPECT_EQ(parse_check_target("all"), CheckTarget::all);
    EXPECT_FALSE(parse_check_target("bogus"));
}

TEST(Commands, ChecksPassAndCorruptionFails) {
    auto l = load("reference_all.cfg");
    CheckOptions opts;
    opts.target = CheckTarget::alt;
    opts.sim.trials = 200000;
    opts.sim.threads = 1;
    const auto rows = run_checks(l.cfg, l.inputs, opts);
    ASSERT_FALSE(rows.empty());
    for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.label;

    opts.corrupt_exact = 0.05;
    const auto corrupted = run_checks(l.cfg, l.inputs, opts);
    bool any_fail = false;
    for (const auto& r : corrupted) any_fail = any_fail || !r.pass;
    EXPECT_TRUE(any_fail);
    std::ostringstream out;
    render_checks(out, corrupted, OutputFormat::text);
    EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace coincidence
