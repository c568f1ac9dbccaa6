#include <benchmark/benchmark.h>

#include <random>

#include "flagcoh/blowup.hpp"
#include "flagcoh/cohomology.hpp"
#include "flagcoh/tau.hpp"
#include "flagcoh/toda_flow.hpp"
#include "flagcoh/weyl.hpp"

using namespace flagcoh;

namespace {

const char* kTypes[] = {"A4", "B4", "D5", "F4", "E6"};

void BM_Enumerate(benchmark::State& state) {
    const auto t = LieType::parse(kTypes[state.range(0)]);
    for (auto _ : state) {
        auto g = WeylGroup::enumerate(t);
        benchmark::DoNotOptimize(g.order());
    }
    state.SetLabel(t.str());
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_EtaTable(benchmark::State& state) {
    const auto t = LieType::parse(kTypes[state.range(0)]);
    const auto g = WeylGroup::enumerate(t);
    const auto eps = SignVector::all_minus(t.rank());
    for (auto _ : state) {
        auto tab = eta_table(g, eps);
        benchmark::DoNotOptimize(tab.values.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.order()));
    state.SetLabel(t.str());
}
BENCHMARK(BM_EtaTable)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_Covers(benchmark::State& state) {
    const auto g = WeylGroup::enumerate(LieType::parse("F4"));
    for (auto _ : state) {
        auto c = g.all_upper_covers();
        benchmark::DoNotOptimize(c.data());
    }
}
BENCHMARK(BM_Covers)->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state) {
    const char* names[] = {"B3", "C4", "F4"};
    const auto t = LieType::parse(names[state.range(0)]);
    const auto data = IncidenceData::make(t, SignVector::all_minus(t.rank()));
    for (auto _ : state) {
        auto h = integral_cohomology(orientation_complex(data));
        benchmark::DoNotOptimize(h.degrees.data());
    }
    state.SetLabel(t.str());
}
BENCHMARK(BM_Cohomology)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Tau(benchmark::State& state) {
    const char* names[] = {"A5", "C4", "D5"};
    const auto t = LieType::parse(names[state.range(0)]);
    for (auto _ : state) {
        auto f = nilpotent_tau(t);
        benchmark::DoNotOptimize(f.taus.data());
    }
    state.SetLabel(t.str());
}
BENCHMARK(BM_Tau)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Flow(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto spec = random_spectrum(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        auto r = total_blowups(spec);
        benchmark::DoNotOptimize(r.total);
    }
}
BENCHMARK(BM_Flow)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
