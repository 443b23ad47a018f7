// Copyright 2026 The Stackdeceive Authors
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

#include <random>
#include <vector>

#include "stackdeceive/deception.h"
#include "stackdeceive/sse.h"
#include "stackdeceive/strong_deception.h"
#include "test_util.h"

namespace stackdeceive {
namespace {

std::vector<Game> Games(int m, int n, int count, bool non_degenerate) {
  std::mt19937_64 rng(m * 100 + n);
  std::vector<Game> out;
  while (static_cast<int>(out.size()) < count) {
    Game g = testing::RandomGame(rng, m, n);
    if (non_degenerate && IsMaxDegenerate(g.leader)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

void BM_ComputeSse(benchmark::State& state) {
  const auto games = Games(state.range(0), state.range(1), 16, false);
  std::size_t i = 0;
  for (auto _ : state) {
    const Game& g = games[i++ % games.size()];
    benchmark::DoNotOptimize(ComputeSse(g.leader, *g.follower));
  }
}
BENCHMARK(BM_ComputeSse)->Args({2, 2})->Args({4, 4})->Args({6, 6})->Args({8, 8});

void BM_Maximin(benchmark::State& state) {
  const auto games = Games(state.range(0), state.range(1), 16, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Maximin(games[i++ % games.size()].leader));
  }
}
BENCHMARK(BM_Maximin)->Args({4, 4})->Args({8, 8})->Args({12, 12});

void BM_DeceiveOptimal(benchmark::State& state) {
  const auto games = Games(state.range(0), state.range(1), 16, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(DeceiveOptimal(games[i++ % games.size()]));
  }
}
BENCHMARK(BM_DeceiveOptimal)->Args({3, 3})->Args({5, 5})->Args({7, 7});

void BM_StrongDeceive(benchmark::State& state) {
  const auto games = Games(state.range(0), state.range(1), 16, true);
  const Rational epsilon(1, 100);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        StrongDeceive(games[i++ % games.size()], epsilon));
  }
}
BENCHMARK(BM_StrongDeceive)->Args({3, 3})->Args({5, 5})->Args({7, 7});

}  // namespace
}  // namespace stackdeceive

BENCHMARK_MAIN();
