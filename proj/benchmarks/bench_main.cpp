#include <benchmark/benchmark.h>

#include <string>

#include "orthotope/census.hpp"
#include "orthotope/class_table.hpp"
#include "orthotope/ehrhart.hpp"
#include "orthotope/io.hpp"
#include "orthotope/oracle.hpp"
#include "orthotope/orthant_set.hpp"

namespace {

using namespace ortho;

VoxelSet load(const char* name) {
    return read_voxels_file(std::string(ORTHOTOPE_TESTDATA_DIR "/") + name);
}

void BM_enumerate(benchmark::State& state) {
    const int max_dim = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_classes(max_dim));
}
BENCHMARK(BM_enumerate)->Arg(4)->Arg(6)->Arg(8);

void BM_table_build(benchmark::State& state) {
    const int max_dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ClassTable t(max_dim);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_table_build)->Arg(4)->Arg(5)->Arg(6);

void BM_recognize_round_trip(benchmark::State& state) {
    const auto classes = enumerate_classes(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const Diagram& d : classes) {
            if (d.dim() == 0) continue;
            std::vector<int> orient(static_cast<std::size_t>(d.dim()), 1);
            benchmark::DoNotOptimize(recognize(orthants_of(d, orient)));
        }
}
BENCHMARK(BM_recognize_round_trip)->Arg(4)->Arg(5);

void BM_classify(benchmark::State& state) {
    const ClassTable t(4);
    const VoxelSet s =
        state.range(0) == 2 ? load("example2d.txt") : load("example3d.txt");
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(s, t));
}
BENCHMARK(BM_classify)->Arg(2)->Arg(3);

void BM_class_ehrhart(benchmark::State& state) {
    const ClassTable t(4);
    const VoxelSet s = load("example3d.txt");
    const CellCensus c = classify(s, t);
    for (auto _ : state)
        benchmark::DoNotOptimize(class_ehrhart(c, t));
}
BENCHMARK(BM_class_ehrhart);

void BM_direct_census(benchmark::State& state) {
    const ClassTable t(4);
    const VoxelSet s = load("example2d.txt");
    const DilationSpec spec =
        DilationSpec::uniform(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(direct_census(s, spec, t));
}
BENCHMARK(BM_direct_census)->Arg(1)->Arg(4);

void BM_random_generic(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            random_generic(3, static_cast<int>(state.range(0)), 42));
}
BENCHMARK(BM_random_generic)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
