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

#include "sceneqa/scene_graph.h"

namespace sceneqa {

namespace {
const std::string kEgoId = "me";
const std::string kEgoCategoryName = "me";
const std::string kEmpty;
}  // namespace

const std::string& SceneGraph::node_id(int node) const {
  return node == kEgoNode ? kEgoId : objects[node - 1].id;
}

const std::string& SceneGraph::node_category(int node) const {
  return node == kEgoNode ? kEgoCategoryName : objects[node - 1].category;
}

const std::string& SceneGraph::node_status(int node) const {
  return node == kEgoNode ? kEmpty : objects[node - 1].status;
}

SceneGraph build_scene_graph(const Scene& scene) {
  SceneGraph graph;
  graph.scene_id = scene.scene_id;
  graph.ego = scene.ego;
  graph.objects = scene.objects;

  const int n = graph.node_count();
  graph.edges.assign(static_cast<std::size_t>(n) * n, Relation::front);

  const Vec2 forward = forward_direction(scene.ego);
  std::vector<Vec2> centers(n);
  centers[SceneGraph::kEgoNode] = {0.0, 0.0};  // ego sits at the scene origin
  for (int i = 1; i < n; ++i) {
    centers[i] = graph.objects[i - 1].box.center2d();
  }

  for (int ref = 0; ref < n; ++ref) {
    for (int target = 0; target < n; ++target) {
      if (ref == target) continue;
      graph.edges[static_cast<std::size_t>(ref) * n + target] =
          bin_relation(signed_angle(centers[ref], centers[target], forward));
    }
  }
  return graph;
}

}  // namespace sceneqa
