// Serial vs OpenMP kernels on the d=6 simple-factor build (665280 vertices).

#include "indcover/cover.hpp"
#include "indcover/kernels.hpp"
#include "indcover/pipeline.hpp"

#include <benchmark/benchmark.h>

using namespace indcover;

namespace {

struct Fixture {
    BuildResult build = build_all_covers(6, Strategy::simple_factors);
    std::vector<std::uint8_t> mask =
        membership_mask(build.graph->num_vertices(), build.covers[2].subset);
    // the 2-step kernel wants a set with internal edges
    std::vector<std::uint8_t> half = [&] {
        std::vector<std::uint8_t> m(build.graph->num_vertices());
        for (std::size_t v = 0; v < m.size(); v += 2) {
            m[v] = 1;
        }
        return m;
    }();
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

template <auto Kernel>
void tally(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(*f.build.graph, f.mask));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.build.graph->num_darts()));
}

template <auto Kernel>
void walks(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(*f.build.graph, f.half));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.build.graph->num_darts()));
}

template <auto Kernel>
void neighbourhoods(benchmark::State& state) {
    const auto& f = fixture();
    const auto& p = f.build.projections.front();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(*p.source, *p.target, p.dart_map));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.source->num_darts()));
}

}  // namespace

BENCHMARK(tally<kernels::serial::tally_cover>)->Name("tally_cover/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(tally<kernels::tally_cover>)->Name("tally_cover/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(walks<kernels::serial::two_step_walks_within>)->Name("two_step_walks/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(walks<kernels::two_step_walks_within>)->Name("two_step_walks/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(neighbourhoods<kernels::serial::first_bad_neighbourhood>)
    ->Name("first_bad_neighbourhood/serial")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(neighbourhoods<kernels::first_bad_neighbourhood>)
    ->Name("first_bad_neighbourhood/omp")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
