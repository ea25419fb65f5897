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

#ifndef SCENEQA_SCENE_H_
#define SCENEQA_SCENE_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sceneqa/geometry.h"

namespace sceneqa {

// Label vocabulary for objects. The lists are configuration, not code: scenes
// are validated against whatever taxonomy they are loaded with. Defaults
// mirror the usual driving-dataset classes and per-class motion attributes.
struct Taxonomy {
  std::vector<std::string> categories;
  std::vector<std::string> statuses;
  // Irregular plurals for question rendering ("bus" -> "buses"). Everything
  // else takes a plain "s".
  std::map<std::string, std::string> plural_exceptions;

  bool has_category(const std::string& c) const;
  bool has_status(const std::string& s) const;
  std::string plural(const std::string& noun) const;

  static Taxonomy defaults();
};

// Object slot values that are not taxonomy categories: the wildcard noun and
// the ego vehicle as it appears in questions.
inline constexpr const char* kThingCategory = "thing";
inline constexpr const char* kEgoCategory = "me";

// Oriented box in scene coordinates, XY plane is the ground plane.
struct Box3D {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double x_size = 0.0;
  double y_size = 0.0;
  double z_size = 0.0;
  double yaw = 0.0;  // radians in [-pi, pi)

  Vec2 center2d() const { return {x, y}; }
};

struct SceneObject {
  std::string id;
  std::string category;
  std::string status;  // empty when the object carries no status annotation
  Box3D box;

  bool has_status() const { return !status.empty(); }
};

struct EgoState {
  std::array<double, 3> velocity = {0.0, 0.0, 0.0};  // m/s
  double heading_yaw = 0.0;  // radians in [-pi, pi); forward fallback
};

// One annotated keyframe. Coordinates are ego-frame: the ego vehicle sits at
// the origin of the XY plane (the annotation record carries no ego pose).
// Scenes are immutable after construction and safe to share across threads.
struct Scene {
  std::string scene_id;
  EgoState ego;
  std::vector<SceneObject> objects;
};

// Throws SchemaError on any invariant violation: duplicate object id,
// non-positive box size, non-finite coordinate, or a category/status outside
// the taxonomy. Unknown labels are reported with the offending object id.
void validate_scene(const Scene& scene, const Taxonomy& taxonomy);

}  // namespace sceneqa

#endif  // SCENEQA_SCENE_H_
