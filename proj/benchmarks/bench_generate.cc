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

#include <cmath>
#include <vector>

#include "sceneqa/common.h"
#include "sceneqa/generator.h"
#include "sceneqa/templates.h"

namespace {

using namespace sceneqa;

// Small local scene synthesizer; benchmarks stay independent of tests/.
Scene bench_scene(std::uint64_t seed, int objects) {
  Rng rng(seed);
  Scene scene;
  scene.scene_id = "bench-" + std::to_string(seed);
  scene.ego.velocity = {6.0, 1.0, 0.0};
  const char* categories[] = {"car", "pedestrian", "truck", "bus", "bicycle"};
  const char* statuses[] = {"moving", "parked", "stopped", "moving",
                            "with rider"};
  for (int i = 0; i < objects; ++i) {
    SceneObject obj;
    obj.id = "o" + std::to_string(i);
    const std::size_t kind = rng.bounded(5);
    obj.category = categories[kind];
    obj.status = statuses[kind];
    const double radius = 4.0 + 40.0 * rng.unit();
    const double angle = rng.unit() * 6.28318;
    obj.box = {radius * std::cos(angle),
               radius * std::sin(angle),
               0.8,
               3.0 + rng.unit(),
               1.5 + rng.unit(),
               1.5,
               0.0};
    scene.objects.push_back(obj);
  }
  return scene;
}

void BM_InstantiateTemplate(benchmark::State& state) {
  const Registry registry = default_registry();
  const QuestionTemplate* tmpl = registry.find("exist_relate");
  const SceneGraph graph = build_scene_graph(bench_scene(7, state.range(0)));
  GenerationConfig config;
  config.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(instantiate(graph, *tmpl, Taxonomy::defaults(),
                                         config, 99, 512, nullptr));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InstantiateTemplate)->RangeMultiplier(2)->Range(4, 32)
    ->Complexity();

void BM_GenerateDataset(benchmark::State& state) {
  const Registry registry = default_registry();
  std::vector<Scene> scenes;
  for (int i = 0; i < 10; ++i) scenes.push_back(bench_scene(100 + i, 15));
  GenerationConfig config;
  config.seed = 7;
  config.per_template_cap = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_dataset(scenes, registry,
                                              Taxonomy::defaults(), config,
                                              state.range(0)));
  }
}
BENCHMARK(BM_GenerateDataset)->Arg(1)->Arg(4);

void BM_ParseRegistry(benchmark::State& state) {
  const std::string text = default_registry_text();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_registry_text(text));
  }
}
BENCHMARK(BM_ParseRegistry);

}  // namespace

BENCHMARK_MAIN();
