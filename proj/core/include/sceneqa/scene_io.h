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

#ifndef SCENEQA_SCENE_IO_H_
#define SCENEQA_SCENE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sceneqa/scene.h"

namespace sceneqa {

// Scene annotation format (JSON), one object per scene:
//   {"scene_id": "...",
//    "ego": {"velocity": [vx, vy, vz], "heading_yaw": r},
//    "objects": [{"id": "...", "category": "...", "status": "...",
//                 "box": [x, y, z, x_size, y_size, z_size, yaw]}, ...]}
// "status" is optional. Lengths in meters, angles in radians. A file may hold
// one scene object or an array of them. Doubles serialize with shortest
// round-trip precision, so load/save is value-exact.

// Parses and validates. Throws SchemaError / ParseError with context.
Scene scene_from_text(std::string_view text, const Taxonomy& taxonomy);
std::vector<Scene> scenes_from_text(std::string_view text,
                                    const Taxonomy& taxonomy);
std::vector<Scene> load_scenes_file(const std::filesystem::path& path,
                                    const Taxonomy& taxonomy);

// The "*.json" files of a directory in lexicographic filename order.
std::vector<std::filesystem::path> list_scene_files(
    const std::filesystem::path& dir);

// Loads every "*.json" in lexicographic filename order.
std::vector<Scene> load_scenes_dir(const std::filesystem::path& dir,
                                   const Taxonomy& taxonomy);

// Canonical single-scene serialization (round-trips through
// scene_from_text).
std::string scene_to_text(const Scene& scene);
void save_scene_file(const Scene& scene, const std::filesystem::path& path);

}  // namespace sceneqa

#endif  // SCENEQA_SCENE_IO_H_
