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

#include <vector>

#include "sceneqa/common.h"
#include "sceneqa/relation.h"
#include "sceneqa/scene_graph.h"

namespace {

using namespace sceneqa;

std::vector<Vec2> random_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec2> points(n);
  for (Vec2& p : points) {
    p = {rng.unit() * 100 - 50, rng.unit() * 100 - 50};
  }
  return points;
}

void BM_RelationBetween(benchmark::State& state) {
  const auto points = random_points(1024, 11);
  EgoState ego;
  ego.velocity = {6.0, 2.0, 0.0};
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec2 a = points[i % points.size()];
    const Vec2 b = points[(i + 7) % points.size()];
    benchmark::DoNotOptimize(relation_between(a, b, ego));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RelationBetween);

void BM_BinRelation(benchmark::State& state) {
  Rng rng(13);
  std::vector<SignedAngle> angles(4096);
  for (SignedAngle& a : angles) {
    a = SignedAngle::from_degrees(rng.unit() * 360.0 - 180.0);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bin_relation(angles[i++ % angles.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BinRelation);

void BM_BuildSceneGraph(benchmark::State& state) {
  Scene scene;
  scene.scene_id = "bench";
  scene.ego.velocity = {5.0, 0.0, 0.0};
  const auto points = random_points(state.range(0), 17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    SceneObject obj;
    obj.id = "o" + std::to_string(i);
    obj.category = "car";
    obj.status = "moving";
    obj.box = {points[i].x, points[i].y, 0.0, 4.4, 1.9, 1.5, 0.3};
    scene.objects.push_back(obj);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_scene_graph(scene));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildSceneGraph)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
