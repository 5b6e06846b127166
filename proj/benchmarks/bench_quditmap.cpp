#include <benchmark/benchmark.h>

#include "quditmap/experiment.hpp"
#include "quditmap/router.hpp"
#include "quditmap/verify.hpp"

using namespace quditmap;

static void BM_EncodeCompact(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto op = make_operator("q2", d);
  const auto scheme = EncodingScheme::gray(d);
  for (auto _ : state) benchmark::DoNotOptimize(simplify(encode(op, scheme)));
}
BENCHMARK(BM_EncodeCompact)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_EncodeTwoParticleUnary(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto op = make_operator("qq", d);
  const auto scheme = EncodingScheme::unary(d);
  for (auto _ : state) benchmark::DoNotOptimize(simplify(encode(op, scheme)));
}
BENCHMARK(BM_EncodeTwoParticleUnary)->Arg(4)->Arg(8)->Arg(16);

static void BM_Synthesize(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto sum = simplify(encode(make_operator("q2", d), EncodingScheme::std_binary(d)));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(sum, {}));
  state.counters["cnot"] = static_cast<double>(staircase_cnot_count(sum));
}
BENCHMARK(BM_Synthesize)->Arg(8)->Arg(16)->Arg(32);

static void BM_RouteOnce(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Circuit c = experiment::synthesize_operator("q2", d, "unary");
  const Topology t = Topology::grid(c.width());
  const Placement p = snake_placement(t, PlacementKind::HorizontalSnake);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(route_once(c, t, p, seed++));
}
BENCHMARK(BM_RouteOnce)->Arg(6)->Arg(10)->Arg(16);

static void BM_RouteBest(benchmark::State& state) {
  const Circuit c = experiment::synthesize_operator("nn", 4, "gray");
  const Topology t = Topology::ladder(c.width());
  const auto placements = default_placements(t);
  const RouteOptions opts{static_cast<std::size_t>(state.range(0)), 0, false, 0};
  for (auto _ : state) benchmark::DoNotOptimize(route_best(c, t, placements, opts));
}
BENCHMARK(BM_RouteBest)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CodeSubspaceCheck(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto op = make_operator("qq", d);
  const auto scheme = EncodingScheme::gray(d);
  const auto sum = simplify(encode(op, scheme));
  for (auto _ : state) benchmark::DoNotOptimize(verify::code_subspace_check(op, scheme, sum));
}
BENCHMARK(BM_CodeSubspaceCheck)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
