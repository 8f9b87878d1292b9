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

#include <random>

#include "liegeo/module.hpp"

namespace {

using namespace liegeo;

PolyMatrix random_matrix(const RingPtr& ring, size_t n, int max_deg, std::mt19937_64& rng) {
    PolyMatrix m(ring, n, n);
    std::uniform_int_distribution<int64_t> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<size_t> var(0, ring->arity() - 1);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            std::vector<Poly::Term> terms;
            for (int t = 0; t < 3; ++t) {
                Monomial mono(ring->arity(), 0);
                for (int k = deg(rng); k > 0; --k) mono[var(rng)]++;
                terms.emplace_back(mono, ring->coeffs.from_int(coeff(rng)));
            }
            m.at(r, c) = Poly::from_terms(ring, terms);
        }
    return m;
}

void BM_ModuleRank(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    auto ring = make_ring({"x1", "x2"}, Field::rationals());
    std::mt19937_64 rng(99);
    ModulePresentation pres(ring, n, random_matrix(ring, n, 2, rng));
    for (auto _ : state) benchmark::DoNotOptimize(module_rank(pres));
}
BENCHMARK(BM_ModuleRank)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
