// Copyright 2026 The rnstruct Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "rnstruct/catalog.h"
#include "rnstruct/equivalence.h"
#include "rnstruct/integrable.h"
#include "rnstruct/pn.h"

namespace rnstruct {
namespace {

LieAlgebra A41() { return InstantiateAlgebra(*FindEntry("A41"), {}); }

Bivector RandomBivector(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 5);
  RMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = x;
      m(j, i) = -x;
    }
  }
  return Bivector::FromMatrix(m);
}

void BM_CybeMatrix(benchmark::State& state) {
  LieAlgebra g = A41();
  std::mt19937_64 rng(1);
  Bivector r = RandomBivector(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(CheckCybeMatrix(g, r));
}
BENCHMARK(BM_CybeMatrix);

void BM_SchoutenDefect(benchmark::State& state) {
  LieAlgebra g = A41();
  std::mt19937_64 rng(1);
  Bivector r = RandomBivector(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(SchoutenDefect(g, r));
}
BENCHMARK(BM_SchoutenDefect);

void BM_CheckRN(benchmark::State& state) {
  const CatalogEntry& e = *FindEntry("A41");
  Assignment a = SampleParameters(e, "rn", 1, 2)[1];
  LieAlgebra g = InstantiateAlgebra(e, a);
  Bivector r = InstantiateR(e, "rn", a);
  Endomorphism n = InstantiateN(e, "rn", a);
  for (auto _ : state) benchmark::DoNotOptimize(CheckRN(g, r, n).ok());
}
BENCHMARK(BM_CheckRN);

void BM_VerifyCatalog(benchmark::State& state) {
  int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(VerifyCatalog(1, samples).failures.size());
}
BENCHMARK(BM_VerifyCatalog)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SearchWitnessSameClass(benchmark::State& state) {
  const CatalogEntry& e = *FindEntry("A41");
  LieAlgebra g = A41();
  AutomorphismFamily fam = FamilyFor(e, {});
  Bivector r = Bivector::FromWedge(4, {{1, 2, 1}, {1, 3, 1}});
  Bivector r2 = Bivector::FromWedge(4, {{1, 2, 1}, {1, 3, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(SearchWitness(g, fam, r, r2).has_value());
}
BENCHMARK(BM_SearchWitnessSameClass)->Unit(benchmark::kMillisecond);

void BM_SearchWitnessExhausted(benchmark::State& state) {
  const CatalogEntry& e = *FindEntry("A41");
  LieAlgebra g = A41();
  AutomorphismFamily fam = FamilyFor(e, {});
  Bivector r = Bivector::FromWedge(4, {{1, 3, 1}});
  Bivector r2 = Bivector::FromWedge(4, {{1, 3, -1}});
  SearchBudget budget;
  budget.trials = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchWitness(g, fam, r, r2, nullptr, nullptr, budget).has_value());
  }
}
BENCHMARK(BM_SearchWitnessExhausted)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Invariants(benchmark::State& state) {
  const IntegrableExample& ex = A41Example();
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Invariants(LaxMatrix(ex.S, ex.r, ex.T), k));
  }
}
BENCHMARK(BM_Invariants)->Arg(3)->Arg(6);

void BM_IndependenceRank(benchmark::State& state) {
  const IntegrableExample& ex = A41Example();
  std::vector<Polynomial> inv = Invariants(LaxMatrix(ex.S, ex.r, ex.T), 3);
  for (auto _ : state) benchmark::DoNotOptimize(IndependenceRank(ex.phase, inv).rank);
}
BENCHMARK(BM_IndependenceRank)->Unit(benchmark::kMillisecond);

void BM_SumHamiltonian(benchmark::State& state) {
  const IntegrableExample& ex = A41Example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SumHamiltonian(ex.g, ex.S, ex.T, ex.r, ex.parts).consistency);
  }
}
BENCHMARK(BM_SumHamiltonian)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rnstruct

BENCHMARK_MAIN();
