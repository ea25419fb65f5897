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

#include "support/synthetic.h"

#include <unistd.h>

#include <atomic>
#include <cmath>

#include "sceneqa/common.h"
#include "sceneqa/dataset_io.h"

namespace sceneqa::testing {

namespace {

struct CategoryProfile {
  const char* category;
  int weight;
  std::vector<const char*> statuses;  // empty: the class carries no status
  double base_size[3];                // x, y, z meters
};

const std::vector<CategoryProfile>& profiles() {
  static const std::vector<CategoryProfile> kProfiles = {
      {"car", 30, {"moving", "parked", "stopped"}, {4.5, 1.9, 1.6}},
      {"pedestrian", 18, {"moving", "standing", "sitting"}, {0.6, 0.6, 1.7}},
      {"truck", 10, {"moving", "parked", "stopped"}, {7.5, 2.5, 3.0}},
      {"bus", 8, {"moving", "parked", "stopped"}, {11.0, 2.9, 3.4}},
      {"bicycle", 8, {"with rider", "without rider"}, {1.7, 0.6, 1.3}},
      {"motorcycle", 7, {"with rider", "without rider"}, {2.1, 0.8, 1.4}},
      {"trailer", 5, {"moving", "parked", "stopped"}, {9.0, 2.6, 3.6}},
      {"construction vehicle", 5, {"moving", "parked", "stopped"},
       {6.0, 2.8, 3.2}},
      {"traffic cone", 5, {}, {0.3, 0.3, 0.8}},
      {"barrier", 4, {}, {2.0, 0.4, 1.0}},
  };
  return kProfiles;
}

const CategoryProfile& pick_profile(Rng& rng) {
  static const int total = [] {
    int sum = 0;
    for (const auto& p : profiles()) sum += p.weight;
    return sum;
  }();
  int ticket = static_cast<int>(rng.bounded(total));
  for (const auto& p : profiles()) {
    ticket -= p.weight;
    if (ticket < 0) return p;
  }
  return profiles().back();
}

}  // namespace

Scene make_scene(std::uint64_t seed, int min_objects, int max_objects) {
  Rng rng(fnv1a("synthetic-scene", fnv1a_u64(seed)));
  Scene scene;
  scene.scene_id = "syn-" + to_hex16(seed);

  if (rng.unit() < 0.5) {
    const double speed = 2.0 + 10.0 * rng.unit();
    const double dir = (rng.unit() * 2.0 - 1.0) * kPi;
    scene.ego.velocity = {speed * std::cos(dir), speed * std::sin(dir),
                          0.4 * (rng.unit() - 0.5)};
  } else {
    // Parked ego: planar speed below the forward-direction threshold.
    scene.ego.velocity = {0.1 * (rng.unit() - 0.5), 0.1 * (rng.unit() - 0.5),
                          0.0};
  }
  scene.ego.heading_yaw = normalize_radians((rng.unit() * 2.0 - 1.0) * kPi);

  const int count =
      min_objects + static_cast<int>(rng.bounded(max_objects - min_objects + 1));
  std::vector<Vec2> placed;
  for (int i = 0; i < count; ++i) {
    const CategoryProfile& profile = pick_profile(rng);
    SceneObject obj;
    obj.id = "obj-" + std::to_string(i);
    obj.category = profile.category;
    if (!profile.statuses.empty() && rng.unit() < 0.92) {
      obj.status = profile.statuses[rng.bounded(profile.statuses.size())];
    }

    Vec2 center;
    for (;;) {
      const double radius = 3.0 + 42.0 * rng.unit();
      const double angle = (rng.unit() * 2.0 - 1.0) * kPi;
      center = {radius * std::cos(angle), radius * std::sin(angle)};
      bool clear = true;
      for (const Vec2& other : placed) {
        if ((center - other).norm() < 0.5) {
          clear = false;
          break;
        }
      }
      if (clear) break;
    }
    placed.push_back(center);

    const double scale = 0.8 + 0.4 * rng.unit();
    obj.box.x = center.x;
    obj.box.y = center.y;
    obj.box.z = profile.base_size[2] * scale / 2.0;
    obj.box.x_size = profile.base_size[0] * scale;
    obj.box.y_size = profile.base_size[1] * scale;
    obj.box.z_size = profile.base_size[2] * scale;
    obj.box.yaw = normalize_radians((rng.unit() * 2.0 - 1.0) * kPi);
    scene.objects.push_back(std::move(obj));
  }
  validate_scene(scene, Taxonomy::defaults());
  return scene;
}

std::vector<Scene> make_scenes(std::uint64_t seed, int count, int min_objects,
                               int max_objects) {
  std::vector<Scene> scenes;
  scenes.reserve(count);
  for (int i = 0; i < count; ++i) {
    scenes.push_back(make_scene(fnv1a_u64(seed) + i, min_objects, max_objects));
  }
  return scenes;
}

const std::set<std::pair<std::string, std::string>>& default_blacklist() {
  static const auto blacklist = load_blacklist_file(
      std::filesystem::path(SCENEQA_DATA_DIR) / "blacklist.txt");
  return blacklist;
}

GenerationConfig test_config(std::uint64_t seed) {
  GenerationConfig config;
  config.seed = seed;
  config.blacklist = default_blacklist();
  return config;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("sceneqa_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter.fetch_add(1)));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace sceneqa::testing
