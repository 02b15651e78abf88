#include <benchmark/benchmark.h>

#include "cube/ccc.hpp"
#include "cube/kernel.hpp"
#include "cube/reduction.hpp"
#include "cube/stdlib.hpp"
#include "cube/surface.hpp"

namespace {

using namespace cube;

Term times_term(std::int64_t n) {
  return Term::apps(stdlib_lookup("times")->term, {church_numeral(n), church_numeral(n)});
}

void BM_NormalizeTimes(benchmark::State& state, Strategy s) {
  Term t = times_term(state.range(0));
  for (auto _ : state) {
    ReductionTrace tr = normalize(t, s, 1'000'000, {0, false});
    benchmark::DoNotOptimize(tr.outcome.term);
  }
}
BENCHMARK_CAPTURE(BM_NormalizeTimes, normal, Strategy::NormalOrder)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(BM_NormalizeTimes, cbn, Strategy::CallByName)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK_CAPTURE(BM_NormalizeTimes, cbv, Strategy::CallByValue)->Arg(5)->Arg(10)->Arg(20);

void BM_LoopDetection(benchmark::State& state) {
  Term omega = combinator("Omega")->term;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(omega, Strategy::NormalOrder, 100).outcome.period);
}
BENCHMARK(BM_LoopDetection);

void BM_InferStdlib(benchmark::State& state) {
  std::vector<std::pair<PtsSpec, NamedDef>> typed;
  for (const NamedDef& d : stdlib()) {
    if (!d.spec.empty()) typed.emplace_back(*spec_by_name(d.spec), d);
  }
  for (auto _ : state) {
    for (const auto& [spec, d] : typed) benchmark::DoNotOptimize(infer(spec, {}, d.term));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(typed.size()));
}
BENCHMARK(BM_InferStdlib);

void BM_InferTypedNumeral(benchmark::State& state) {
  Term n = typed_church_numeral(static_cast<std::uint64_t>(state.range(0)));
  PtsSpec two = cube_spec(CubeCorner::Two);
  for (auto _ : state) benchmark::DoNotOptimize(infer(two, {}, n));
}
BENCHMARK(BM_InferTypedNumeral)->Arg(10)->Arg(100)->Arg(1000);

void BM_ParseStdlib(benchmark::State& state) {
  const std::string_view src = stdlib_source();
  ParseEnv env;
  env.allow_free = false;
  for (auto _ : state) benchmark::DoNotOptimize(parse_defs(src, env));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(src.size()));
}
BENCHMARK(BM_ParseStdlib);

void BM_PrintParseRoundTrip(benchmark::State& state) {
  Term t = normalize(times_term(state.range(0)), Strategy::NormalOrder).outcome.term;
  for (auto _ : state) benchmark::DoNotOptimize(parse_term(print_term(t)));
}
BENCHMARK(BM_PrintParseRoundTrip)->Arg(10)->Arg(30);

void BM_CccLaws(benchmark::State& state) {
  Presentation p = parse_presentation("object A\nobject B\ngen f : A -> B\ngen m : A & A -> A\n").value();
  for (auto _ : state) benchmark::DoNotOptimize(check_laws(p, 50, 1));
}
BENCHMARK(BM_CccLaws)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
