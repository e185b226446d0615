#include <benchmark/benchmark.h>

#include "support.hpp"
#include "tsal/legality.hpp"
#include "tsal/novelty.hpp"
#include "tsal/reader.hpp"
#include "tsal/scengen.hpp"

using namespace tsal;

static void BM_ParseDomain(benchmark::State& state)
{
  std::string text = tsal::test::read_fixture("cartpole/cartpole.tsal");
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_domain(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDomain);

static void BM_PrintDomain(benchmark::State& state)
{
  Domain d = tsal::test::load_domain("cartpole/cartpole.tsal");
  for (auto _ : state)
    benchmark::DoNotOptimize(print_domain(d));
}
BENCHMARK(BM_PrintDomain);

static void BM_CheckEnvironment(benchmark::State& state)
{
  auto env = tsal::test::cartpole();
  for (auto _ : state)
    benchmark::DoNotOptimize(check_environment(env.domain, env.sg));
}
BENCHMARK(BM_CheckEnvironment);

static void BM_SampleMudworld(benchmark::State& state)
{
  auto env = tsal::test::mudworld();
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_state(env.domain, env.sg, seed++));
}
BENCHMARK(BM_SampleMudworld)->Unit(benchmark::kMillisecond);

static void BM_ClassifyLevel8(benchmark::State& state)
{
  auto env = tsal::test::cartpole();
  auto ts = tsal::test::load_script("novelty/level8.tx");
  for (auto _ : state)
    benchmark::DoNotOptimize(classify(ts, env.domain, env.sg, Symbol("POV-AGENT")));
}
BENCHMARK(BM_ClassifyLevel8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
