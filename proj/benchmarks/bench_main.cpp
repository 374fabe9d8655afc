/*
   Copyright 2026 The circlezero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <benchmark/benchmark.h>

#include "circlezero/approx.hpp"
#include "circlezero/families.hpp"
#include "circlezero/identities.hpp"
#include "circlezero/verify.hpp"
#include "circlezero/zeta.hpp"

namespace {

using namespace circlezero;
using families::Family;

void BM_BuildP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(families::build(Family::P, state.range(0)));
}
BENCHMARK(BM_BuildP)->Arg(10)->Arg(50)->Arg(200);

void BM_ChebyshevReduce(benchmark::State& state) {
  const auto poly = families::build(Family::P, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(families::chebyshev_reduce(poly));
}
BENCHMARK(BM_ChebyshevReduce)->Arg(10)->Arg(50);

void BM_SignCountP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify(Family::P, state.range(0), verify::Method::sign_count));
}
BENCHMARK(BM_SignCountP)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RootsP(benchmark::State& state) {
  const auto poly = families::build(Family::P, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::certify_roots(poly, 128));
}
BENCHMARK(BM_RootsP)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_OscillationW(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::oscillation_verify_W(state.range(0)));
}
BENCHMARK(BM_OscillationW)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_ZetaOdd(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(precision::zeta_odd(3, state.range(0)));
}
BENCHMARK(BM_ZetaOdd)->Arg(128)->Arg(1024);

void BM_Approx1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(approx::approx1_zeta3(128));
}
BENCHMARK(BM_Approx1)->Unit(benchmark::kMillisecond);

void BM_Observation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(identities::observation_check(state.range(0), 256));
}
BENCHMARK(BM_Observation)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
