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

#include "liegeo/free_lie.hpp"

namespace {

using namespace liegeo;

// Random combination of the homogeneous basis of one degree.
Element random_homogeneous(const FreeLieAlgebra& f, int degree, std::mt19937_64& rng) {
    ElementBuilder b(f.field());
    std::uniform_int_distribution<int64_t> coeff(0, f.field().size() - 1);
    for (BasisId id : f.window_basis(degree))
        if (f.degree(f.basis_element(id)) == degree) b.add(id, f.field().from_int(coeff(rng)));
    return b.finish();
}

void BM_FreeLieBracket(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    auto f = FreeLieAlgebra::make(Field::prime(3), 2);
    std::mt19937_64 rng(17);
    Element u = random_homogeneous(*f, d, rng);
    Element v = random_homogeneous(*f, d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(f->bracket(u, v));
    state.counters["terms"] = static_cast<double>(u.terms.size() + v.terms.size());
}
BENCHMARK(BM_FreeLieBracket)->DenseRange(1, 5);

void BM_LyndonBasis(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lyndon_basis(3, d));
}
BENCHMARK(BM_LyndonBasis)->DenseRange(4, 8, 2);

}  // namespace
