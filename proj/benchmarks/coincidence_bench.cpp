#include "coincidence/bayesian.hpp"
#include "coincidence/frequentist.hpp"
#include "coincidence/montecarlo.hpp"
#include "coincidence/weighted_draw.hpp"

#include <benchmark/benchmark.h>

#include <filesystem>
#include <vector>

namespace {

using namespace coincidence;

const std::filesystem::path kData = COINCIDENCE_BENCH_DATA_DIR;

const Onomasticon& fixture() {
    static const Onomasticon o = load_onomasticon_file((kData / "onomasticon" / "ilan_fixture.ono").string());
    return o;
}

TargetSetSpec big_targets() {
    return {"big",
            {{"joseph", Gender::male},
             {"james", Gender::male},
             {"unattributed_target_m", Gender::male},
             {"mariam", Gender::female},
             {"salome", Gender::female},
             {"martha", Gender::female},
             {"joanna", Gender::female}}};
}

AnchorSpec jesus() { return {"jesus", AnchorMode::single_name, "jesus", std::nullopt}; }

void BM_TargetSetNu(benchmark::State& state) {
    const auto s = big_targets();
    for (auto _ : state) benchmark::DoNotOptimize(target_set_nu(fixture(), s, RatioKind::equal));
}
BENCHMARK(BM_TargetSetNu);

void BM_ScenarioRow(benchmark::State& state) {
    FreqScenario s{big_targets(), RatioKind::equal, jesus(), {static_cast<std::uint64_t>(state.range(0)), 6, {}}};
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_scenario(fixture(), s));
}
BENCHMARK(BM_ScenarioRow)->Arg(100)->Arg(1000)->Arg(1000000);

void BM_SetDrawProbability(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<Rational> w;
    std::vector<std::size_t> subset;
    Rational total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        w.emplace_back(static_cast<long>(i + 1));
        total += w.back();
        subset.push_back(i);
    }
    total += 7;
    for (auto _ : state) benchmark::DoNotOptimize(set_draw_probability(w, total, subset));
}
BENCHMARK(BM_SetDrawProbability)->DenseRange(2, 12, 2);

void BM_AltLikelihood(benchmark::State& state) {
    const auto table = load_weight_table_file((kData / "weights" / "neutral.wt").string());
    const auto insc = load_inscriptions_file((kData / "inscriptions" / "talpiyot.ins").string());
    for (auto _ : state) benchmark::DoNotOptimize(alt_name_likelihood(insc, table, fixture()));
}
BENCHMARK(BM_AltLikelihood);

void BM_SimulateFrequentist(benchmark::State& state) {
    SimConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    cfg.threads = 1;
    const auto s = big_targets();
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_frequentist(fixture(), s, jesus(), RatioKind::equal, {}, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateFrequentist)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SimulateAlt(benchmark::State& state) {
    const auto table = load_weight_table_file((kData / "weights" / "neutral.wt").string());
    const auto insc = load_inscriptions_file((kData / "inscriptions" / "talpiyot.ins").string());
    SimConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    cfg.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_alt_likelihood(insc, table, fixture(), cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateAlt)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
