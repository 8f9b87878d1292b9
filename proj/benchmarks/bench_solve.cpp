/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <benchmark/benchmark.h>

#include "liegeo/geometry.hpp"
#include "liegeo/terms.hpp"

namespace {

using namespace liegeo;

void BM_MetabelianSolve(benchmark::State& state) {
    const int trunc = static_cast<int>(state.range(0));
    auto sys = parse_system("algebra metabelian rank=2 field=GF(2)\nvars x\neq [x,a1] = 0\n");
    auto amb = Ambient::make(sys, default_carrier(sys), trunc);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys, amb));
    state.counters["points"] = static_cast<double>(amb->size());
}
BENCHMARK(BM_MetabelianSolve)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TwoVariableSolve(benchmark::State& state) {
    auto sys = parse_system("algebra metabelian rank=2 field=GF(2)\nvars x, y\neq [x,y] = 0\n");
    auto amb = Ambient::make(sys, default_carrier(sys), 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys, amb));
    state.counters["points"] = static_cast<double>(amb->size());
}
BENCHMARK(BM_TwoVariableSolve)->Unit(benchmark::kMillisecond);

}  // namespace
