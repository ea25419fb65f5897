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

#ifndef SCENEQA_TESTS_SUPPORT_SYNTHETIC_H_
#define SCENEQA_TESTS_SUPPORT_SYNTHETIC_H_

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sceneqa/generator.h"
#include "sceneqa/scene.h"

namespace sceneqa::testing {

// Deterministic synthetic keyframe: seeded categories, statuses, poses and
// ego state. Object count is uniform in [min_objects, max_objects].
Scene make_scene(std::uint64_t seed, int min_objects, int max_objects);

std::vector<Scene> make_scenes(std::uint64_t seed, int count, int min_objects,
                               int max_objects);

// The shipped blacklist (data/blacklist.txt).
const std::set<std::pair<std::string, std::string>>& default_blacklist();

// Seeded config with the shipped blacklist attached.
GenerationConfig test_config(std::uint64_t seed);

// Unique scratch directory under the system temp dir; removed on
// destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace sceneqa::testing

#endif  // SCENEQA_TESTS_SUPPORT_SYNTHETIC_H_
