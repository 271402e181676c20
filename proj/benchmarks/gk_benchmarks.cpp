/*
 * Copyright 2026 The gkring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "gk/falsify.hpp"
#include "gk/ff.hpp"
#include "gk/geom.hpp"
#include "gk/kring.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto ctx = gk::ff::make_field(2, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<gk::ff::FieldElement> xs(1024);
  for (auto& x : xs) x.packed = rng() % ctx.order();
  std::size_t i = 0;
  gk::ff::FieldElement acc = ctx.one();
  for (auto _ : state) {
    acc = ctx.mul(acc, xs[i++ & 1023]);
    if (acc == ctx.zero()) acc = ctx.one();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(20)->Arg(32);

void BM_FrobeniusDegree(benchmark::State& state) {
  const auto ctx = gk::ff::make_field(3, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gk::ff::frobenius_degree(ctx, {rng() % ctx.order()}, 3));
  }
}
BENCHMARK(BM_FrobeniusDegree)->Arg(6)->Arg(12);

void BM_CountOmega(benchmark::State& state) {
  const auto set = gk::geom::omega(2, 2);
  gk::geom::EnumerationOptions opt;
  opt.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gk::geom::count_points(set, static_cast<unsigned>(state.range(0)), opt));
  }
}
BENCHMARK(BM_CountOmega)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EvaluateX720(benchmark::State& state) {
  const auto cls = gk::kring::class_x_k(3, 720);
  const auto mu = gk::kring::counting_measure(3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(gk::kring::evaluate(cls, mu));
}
BENCHMARK(BM_EvaluateX720);

void BM_ClassifyCounting(benchmark::State& state) {
  const auto cand = gk::kring::counting_measure(2, 3);
  gk::falsify::ClassifyOptions opt;
  opt.probes = std::vector<gk::geom::PolySystem>{};
  for (auto _ : state) benchmark::DoNotOptimize(gk::falsify::classify(2, cand, opt));
}
BENCHMARK(BM_ClassifyCounting);

}  // namespace

BENCHMARK_MAIN();
