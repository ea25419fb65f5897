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

#include "sceneqa/scene.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "sceneqa/common.h"

namespace sceneqa {

bool Taxonomy::has_category(const std::string& c) const {
  return std::find(categories.begin(), categories.end(), c) !=
         categories.end();
}

bool Taxonomy::has_status(const std::string& s) const {
  return std::find(statuses.begin(), statuses.end(), s) != statuses.end();
}

std::string Taxonomy::plural(const std::string& noun) const {
  auto it = plural_exceptions.find(noun);
  if (it != plural_exceptions.end()) return it->second;
  return noun + "s";
}

Taxonomy Taxonomy::defaults() {
  Taxonomy t;
  t.categories = {
      "car",        "truck",   "bus",
      "trailer",    "construction vehicle",
      "pedestrian", "motorcycle",
      "bicycle",    "traffic cone",
      "barrier",
  };
  t.statuses = {
      "moving",  "parked",     "stopped",       "standing",
      "sitting", "with rider", "without rider",
  };
  t.plural_exceptions = {{"bus", "buses"}};
  return t;
}

namespace {

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) {
    throw SchemaError("non-finite value in " + what);
  }
}

void validate_box(const Box3D& box, const std::string& object_id) {
  for (double v : {box.x, box.y, box.z, box.x_size, box.y_size, box.z_size,
                   box.yaw}) {
    require_finite(v, "box of object '" + object_id + "'");
  }
  if (box.x_size <= 0.0 || box.y_size <= 0.0 || box.z_size <= 0.0) {
    throw SchemaError("degenerate box for object '" + object_id +
                      "': sizes must be positive");
  }
  if (box.yaw < -kPi || box.yaw >= kPi) {
    throw SchemaError("yaw of object '" + object_id +
                      "' is not normalized to [-pi, pi)");
  }
}

}  // namespace

void validate_scene(const Scene& scene, const Taxonomy& taxonomy) {
  if (scene.scene_id.empty()) {
    throw SchemaError("scene is missing a scene_id");
  }
  for (double v : scene.ego.velocity) {
    require_finite(v, "ego velocity of scene '" + scene.scene_id + "'");
  }
  require_finite(scene.ego.heading_yaw,
                 "ego heading of scene '" + scene.scene_id + "'");
  if (scene.ego.heading_yaw < -kPi || scene.ego.heading_yaw >= kPi) {
    throw SchemaError("ego heading of scene '" + scene.scene_id +
                      "' is not normalized to [-pi, pi)");
  }

  std::set<std::string> ids;
  for (const SceneObject& obj : scene.objects) {
    if (obj.id.empty()) {
      throw SchemaError("object without id in scene '" + scene.scene_id +
                        "'");
    }
    if (!ids.insert(obj.id).second) {
      throw SchemaError("duplicate id '" + obj.id + "' in scene '" +
                        scene.scene_id + "'");
    }
    if (!taxonomy.has_category(obj.category)) {
      throw SchemaError("unknown category '" + obj.category + "' on object '" +
                        obj.id + "' in scene '" + scene.scene_id + "'");
    }
    if (obj.has_status() && !taxonomy.has_status(obj.status)) {
      throw SchemaError("unknown status '" + obj.status + "' on object '" +
                        obj.id + "' in scene '" + scene.scene_id + "'");
    }
    validate_box(obj.box, obj.id);
  }
}

}  // namespace sceneqa
