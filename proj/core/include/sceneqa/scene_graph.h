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

#ifndef SCENEQA_SCENE_GRAPH_H_
#define SCENEQA_SCENE_GRAPH_H_

#include <string>
#include <vector>

#include "sceneqa/relation.h"
#include "sceneqa/scene.h"

namespace sceneqa {

// Complete directed labeled graph over the scene objects plus a distinguished
// ego node. Node 0 is the ego node (rendered "me", category "me", no status,
// centered at the scene-frame origin); node i >= 1 is objects[i-1]. The edge
// map is total over ordered pairs of distinct nodes.
struct SceneGraph {
  static constexpr int kEgoNode = 0;

  std::string scene_id;
  EgoState ego;
  std::vector<SceneObject> objects;
  std::vector<Relation> edges;  // (n x n) row-major; diagonal unused

  int node_count() const { return static_cast<int>(objects.size()) + 1; }
  bool is_ego(int node) const { return node == kEgoNode; }

  Relation relation(int ref, int target) const {
    return edges[static_cast<std::size_t>(ref) * node_count() + target];
  }

  const std::string& node_id(int node) const;
  const std::string& node_category(int node) const;
  // Empty for the ego node and for objects without a status annotation.
  const std::string& node_status(int node) const;
};

// Builds the complete graph. Every edge label comes from relation_between;
// the ego node participates with its center at the origin. Deterministic:
// identical scenes produce identical graphs. Propagates the degenerate-pair
// error for coincident planar centers.
SceneGraph build_scene_graph(const Scene& scene);

}  // namespace sceneqa

#endif  // SCENEQA_SCENE_GRAPH_H_
