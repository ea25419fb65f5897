/* Copyright 2026 The SceneQA Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "sceneqa/bev.h"
#include "sceneqa/common.h"

namespace {

using namespace sceneqa;

BEVGrid make_grid(int side, int channels) {
  Rng rng(23);
  BEVGrid grid = BEVGrid::zeros(side, side, channels);
  for (double& v : grid.data) v = rng.unit();
  return grid;
}

void BM_CropPoolMean(benchmark::State& state) {
  const BEVGrid grid = make_grid(state.range(0), state.range(1));
  RotatedRect rect;
  rect.center = {state.range(0) / 2.0, state.range(0) / 2.0};
  rect.half_x = state.range(0) / 6.0;
  rect.half_y = state.range(0) / 10.0;
  rect.yaw = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(crop_pool(grid, rect, PoolStrategy::mean));
  }
}
BENCHMARK(BM_CropPoolMean)->Args({16, 8})->Args({180, 32});

void BM_CropPoolMax(benchmark::State& state) {
  const BEVGrid grid = make_grid(state.range(0), state.range(1));
  RotatedRect rect;
  rect.center = {state.range(0) / 2.0, state.range(0) / 2.0};
  rect.half_x = state.range(0) / 6.0;
  rect.half_y = state.range(0) / 10.0;
  rect.yaw = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(crop_pool(grid, rect, PoolStrategy::max));
  }
}
BENCHMARK(BM_CropPoolMax)->Args({16, 8})->Args({180, 32});

void BM_Contains(benchmark::State& state) {
  RotatedRect rect;
  rect.center = {8.0, 8.0};
  rect.half_x = 4.0;
  rect.half_y = 2.0;
  rect.yaw = 0.6;
  Rng rng(29);
  std::size_t i = 0;
  Vec2 points[256];
  for (Vec2& p : points) p = {rng.unit() * 16, rng.unit() * 16};
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains(rect, points[i++ % 256]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Contains);

}  // namespace

BENCHMARK_MAIN();
