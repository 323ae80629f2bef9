#include <benchmark/benchmark.h>

#include <vector>

#include "rforest/base_space.hpp"
#include "rforest/generators.hpp"
#include "rforest/path_space.hpp"
#include "rforest/suites.hpp"
#include "rforest/tree_geometry.hpp"

using namespace rforest;

namespace {

BaseSpace interval_space() { return BaseSpace::interval(rat(10)); }

// Deterministic pool of element pairs with deep shared prefixes.
std::vector<std::pair<ForestElement, ForestElement>> element_pairs(
    const BaseSpace& space, std::size_t count, std::size_t max_breakpoints) {
  GenBounds bounds;
  bounds.max_breakpoints = max_breakpoints;
  Gen g(42);
  std::vector<std::pair<ForestElement, ForestElement>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto sub = g.sub(i);
    ForestElement a = sub.element(space, bounds);
    ForestElement b = sub.mutate(a, space, bounds);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

void BM_Distance(benchmark::State& state) {
  BaseSpace space = interval_space();
  auto pairs = element_pairs(space, 256, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 255];
    benchmark::DoNotOptimize(distance(a, b));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_Meet(benchmark::State& state) {
  BaseSpace space = interval_space();
  auto pairs = element_pairs(space, 256, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 255];
    benchmark::DoNotOptimize(meet(a, b));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_IntervalEnum(benchmark::State& state) {
  BaseSpace space = interval_space();
  auto pairs = element_pairs(space, 256, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 255];
    Interval iv = Interval::make(a, b);
    benchmark::DoNotOptimize(iv.elements().size());
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_ProjectTree(benchmark::State& state) {
  BaseSpace space = interval_space();
  GenBounds bounds;
  bounds.max_intervals = static_cast<std::size_t>(state.range(0));
  Gen g(7);
  std::vector<std::pair<FiniteTree, ForestElement>> cases;
  for (std::size_t i = 0; i < 64; ++i) {
    auto sub = g.sub(i);
    FiniteTree t = sub.tree(space, bounds);
    ForestElement a = sub.mutate(t.elements().front(), space, bounds);
    cases.emplace_back(std::move(t), std::move(a));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [t, a] = cases[i++ & 63];
    benchmark::DoNotOptimize(project_tree(a, t).dist);
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_ParallelPath(benchmark::State& state) {
  BaseSpace space = interval_space();
  GenBounds bounds;
  bounds.max_breakpoints = static_cast<std::size_t>(state.range(0));
  Gen g(11);
  std::vector<Path> paths;
  for (std::size_t i = 0; i < 64; ++i)
    paths.push_back(g.sub(i).path(space, bounds));
  EntourageIndex v = RadiusIndex{rat(1, 2)};
  std::size_t i = 0;
  for (auto _ : state) {
    const Path& f = paths[i++ & 63];
    ParallelPath pp = parallel_path(f, v, rat(1), space);
    benchmark::DoNotOptimize(pp.gamma);
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_ParallelBuild(benchmark::State& state) {
  BaseSpace space = interval_space();
  GenBounds bounds;
  bounds.max_breakpoints = static_cast<std::size_t>(state.range(0));
  Gen g(11);
  std::vector<std::pair<ParallelPath, BasePoint>> cases;
  for (std::size_t i = 0; i < 64; ++i) {
    Path f = g.sub(i).path(space, bounds);
    ParallelPath pp = parallel_path(f, RadiusIndex{rat(1, 2)}, rat(1), space);
    BasePoint x = f.points().front().x;
    cases.emplace_back(std::move(pp), x);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [pp, x] = cases[i++ & 63];
    benchmark::DoNotOptimize(parallel_build(pp, x, space).length());
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_SuiteThroughput(benchmark::State& state) {
  BaseSpace space = interval_space();
  const std::size_t cases = 64;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SuiteConfig cfg{"metric-axioms", seed++, cases, {}};
    RunReport r = run_suite(cfg, space);
    benchmark::DoNotOptimize(r.violations.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cases));
}

}  // namespace

BENCHMARK(BM_Distance)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_Meet)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_IntervalEnum)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ProjectTree)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(BM_ParallelPath)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ParallelBuild)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_SuiteThroughput);

BENCHMARK_MAIN();
