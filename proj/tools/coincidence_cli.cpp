// coincidence: p-values and posteriors for name co-occurrence in tombs.
//
//   coincidence freq     --config data/configs/reference_freq.cfg
//   coincidence bayes    --config data/configs/reference_bayes.cfg
//   coincidence rr-demo
//   coincidence check    --config data/configs/reference_all.cfg --trials 1000000
//   coincidence validate --config <file>
//
// Exit codes: 0 success, 1 a Monte Carlo check failed, 2 configuration or
// usage error.

#include "coincidence/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
    using namespace coincidence;

    CLI::App app{"Surprise measures for name co-occurrences: multiple-tomb p-values, Bayesian posteriors, "
                 "and Monte Carlo cross-checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string format_flag;
    std::uint64_t seed = SimConfig{}.seed;
    std::uint64_t trials = SimConfig{}.trials;
    app.add_option("--config", config_path, "Scenario config file");
    app.add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"text", "delimited"}));
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);

    auto* freq = app.add_subcommand("freq", "Multiple-tomb p-value grid");
    auto* bayes = app.add_subcommand("bayes", "Posterior probabilities for the configured scenarios");

    auto* rr = app.add_subcommand("rr-demo", "Broad-category vs rendition p-values on the three-name toy model");
    bool no_split = false;
    std::string parts_text;
    std::string observed = "A1";
    rr->add_flag("--no-split", no_split, "Only evaluate the broad categories");
    rr->add_option("--parts", parts_text, "Split of A, e.g. A1=1/3,A2=2/3");
    rr->add_option("--observed", observed, "Observed outcome in the split space");

    auto* check = app.add_subcommand("check", "Compare exact values against seeded Monte Carlo estimates");
    std::string target_text = "all";
    unsigned threads = 0;
    std::uint64_t batch = SimConfig{}.batch_size;
    double corrupt = 0.0;
    check->add_option("--target", target_text, "freq, draw, alt, or all")
        ->check(CLI::IsMember({"freq", "draw", "alt", "all"}));
    check->add_option("--threads", threads, "Worker threads (0 = all cores)");
    check->add_option("--batch-size", batch, "Trials per work unit")->check(CLI::PositiveNumber);
    check->add_option("--corrupt-exact", corrupt, "Offset added to exact values (harness self-test)")->group("");

    auto* validate = app.add_subcommand("validate", "Parse a config and every file it references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (rr->parsed()) {
            RrDemoOptions opts;
            opts.split = !no_split;
            opts.observed = observed;
            if (!parts_text.empty()) opts.parts = parse_rendition_parts(parts_text);
            auto rows = run_rr_demo(opts);
            render_rr_demo(std::cout, rows, parse_output_format(format_flag).value_or(OutputFormat::text));
            return kOk;
        }

        if (config_path.empty()) throw ConfigError("--config is required for this subcommand");
        const ScenarioConfig cfg = load_scenario_config(config_path);
        const LoadedInputs inputs = load_inputs(cfg);
        const OutputFormat format = parse_output_format(format_flag).value_or(cfg.output_format);

        if (validate->parsed()) {
            std::cout << "ok: " << cfg.freq_scenarios.size() << " frequentist scenario(s), "
                      << cfg.bayes_scenarios.size() + cfg.custom_weight_paths.size() << " Bayesian scenario(s)\n";
            return kOk;
        }
        if (freq->parsed()) {
            render_grid(std::cout, run_freq(cfg, inputs), format);
            return kOk;
        }
        if (bayes->parsed()) {
            auto results = run_bayes(cfg, inputs);
            render_posteriors(std::cout, results, format);
            return kOk;
        }
        if (check->parsed()) {
            CheckOptions opts;
            opts.target = *parse_check_target(target_text);
            opts.sim.trials = trials;
            opts.sim.seed = seed;
            opts.sim.threads = threads;
            opts.sim.batch_size = batch;
            opts.corrupt_exact = corrupt;
            auto rows = run_checks(cfg, inputs, opts);
            render_checks(std::cout, rows, format);
            bool ok = true;
            for (const auto& r : rows) ok = ok && r.pass;
            if (format == OutputFormat::text)
                std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << rows.size() << " comparisons, "
                          << trials << " trials, seed " << seed << ")\n";
            return ok ? kOk : kCheckFailed;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kOk;
}
