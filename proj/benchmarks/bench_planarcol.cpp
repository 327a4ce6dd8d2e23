#include "planarcol/coloring.hpp"
#include "planarcol/config.hpp"
#include "planarcol/corpus.hpp"
#include "planarcol/cuts.hpp"
#include "planarcol/discharge.hpp"

#include <benchmark/benchmark.h>

using namespace planarcol;

namespace {

// One oddly connected target per standard base, picked by the argument.
auto sample(int index) -> const DTarget&
{
    static const std::vector<DTarget> targets = [] {
        std::vector<DTarget> out;
        for (const auto& base : standard_bases()) {
            auto all = enumerate_multiplicities(base.graph, 8, 1);
            for (const auto& t : all)
                if (is_oddly_connected(t)) {
                    out.push_back(t);
                    break;
                }
        }
        return out;
    }();
    return targets.at(static_cast<size_t>(index));
}

void label_with_base(benchmark::State& state)
{
    state.SetLabel(standard_bases().at(static_cast<size_t>(state.range(0))).name);
}

void BM_MinOddCut(benchmark::State& state)
{
    const auto& t = sample(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_odd_cut(t));
    label_with_base(state);
}
BENCHMARK(BM_MinOddCut)->DenseRange(0, 4);

void BM_EdgeColour(benchmark::State& state)
{
    const auto& t = sample(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(edge_colour(t));
    label_with_base(state);
}
BENCHMARK(BM_EdgeColour)->DenseRange(0, 4);

void BM_DetectAll(benchmark::State& state)
{
    const auto& t = sample(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_all(t));
    label_with_base(state);
}
BENCHMARK(BM_DetectAll)->DenseRange(0, 4);

void BM_ChargeReport(benchmark::State& state)
{
    const auto& t = sample(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(charge_report(t));
    label_with_base(state);
}
BENCHMARK(BM_ChargeReport)->DenseRange(0, 4);

void BM_BuildCorpus(benchmark::State& state)
{
    auto spec = default_corpus_spec();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_corpus(spec));
}
BENCHMARK(BM_BuildCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
