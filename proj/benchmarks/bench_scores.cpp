// Copyright 2026 The properscore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "properscore/propriety.hpp"
#include "properscore/rules.hpp"

namespace ps = properscore;

namespace {

void BM_CdfLogistic(benchmark::State& state) {
  const auto d = ps::Distribution::logistic(0, 1);
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.cdf(x));
    x = x < 5.0 ? x + 1e-3 : -5.0;
  }
}
BENCHMARK(BM_CdfLogistic);

void BM_CdfMixture(benchmark::State& state) {
  const auto d = ps::Distribution::mixture(
      {{0.4, ps::Distribution::normal(0, 1)},
       {0.35, ps::Distribution::laplace(1, 2)},
       {0.25, ps::Distribution::gumbel(-1, 0.5)}});
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.cdf(x));
    x = x < 5.0 ? x + 1e-3 : -5.0;
  }
}
BENCHMARK(BM_CdfMixture);

void BM_NormalQuantile(benchmark::State& state) {
  const auto d = ps::Distribution::normal(0, 1);
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.quantile(p));
    p = p < 0.99 ? p + 1e-4 : 0.01;
  }
}
BENCHMARK(BM_NormalQuantile);

void BM_Crps(benchmark::State& state) {
  const auto d = ps::Distribution::normal(0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::crps(d, 0.7).value);
  }
}
BENCHMARK(BM_Crps);

void BM_STildeStar(benchmark::State& state) {
  const auto d = ps::Distribution::logistic(0, 1);
  const auto w = ps::Weight::constant(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::s_tilde_star(d, 0.7, w).value);
  }
}
BENCHMARK(BM_STildeStar);

void BM_STildeComposed(benchmark::State& state) {
  const auto d = ps::Distribution::logistic(0, 1);
  const auto view = ps::properize_tilde(d, 2.0);
  const auto w = ps::Weight::constant(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::s_tilde(view, 0.7, 2.0, w).value);
  }
}
BENCHMARK(BM_STildeComposed);

void BM_EntropySTilde(benchmark::State& state) {
  const auto d = ps::Distribution::gumbel(0, 1);
  const auto w = ps::Weight::constant(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::entropy_s_tilde(d, w).value);
  }
}
BENCHMARK(BM_EntropySTilde);

void BM_ExpectedScoreDirect(benchmark::State& state) {
  const auto F = ps::Distribution::logistic(0, 1);
  const auto G = ps::Distribution::logistic(0.5, 1.2);
  const auto rule =
      ps::RuleSpec::make(ps::RuleKind::s_tilde_star, std::nullopt, std::nullopt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::expected_score(rule, F, G).value);
  }
}
BENCHMARK(BM_ExpectedScoreDirect);

void BM_ExpectedScoreClosed(benchmark::State& state) {
  const auto F = ps::Distribution::logistic(0, 1);
  const auto G = ps::Distribution::logistic(0.5, 1.2);
  const auto w = ps::Weight::constant(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::expected_s_tilde_closed(F, G, 0.5, w).value);
  }
}
BENCHMARK(BM_ExpectedScoreClosed);

void BM_ArgminG(benchmark::State& state) {
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ps::argmin_g(p, 2.0));
    p = p < 0.99 ? p + 1e-5 : 0.01;
  }
}
BENCHMARK(BM_ArgminG);

void BM_McExpect(benchmark::State& state) {
  const auto d = ps::Distribution::logistic(0, 1);
  auto f = [](double x) { return x * x; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ps::mc_expect(d, f, static_cast<std::size_t>(state.range(0)), 42)
            .mean);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_McExpect)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
