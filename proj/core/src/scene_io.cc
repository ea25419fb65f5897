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

#include "sceneqa/scene_io.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "sceneqa/common.h"

namespace sceneqa {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double get_double(const json& j, const std::string& context) {
  if (!j.is_number()) throw SchemaError(context + ": expected a number");
  return j.get<double>();
}

Scene scene_from_json(const json& j, const Taxonomy& taxonomy) {
  if (!j.is_object()) throw SchemaError("scene record is not an object");
  Scene scene;
  if (!j.contains("scene_id") || !j.at("scene_id").is_string()) {
    throw SchemaError("scene record is missing string field 'scene_id'");
  }
  scene.scene_id = j.at("scene_id").get<std::string>();
  const std::string sctx = "scene '" + scene.scene_id + "'";

  if (!j.contains("ego") || !j.at("ego").is_object()) {
    throw SchemaError(sctx + ": missing 'ego' object");
  }
  const json& ego = j.at("ego");
  if (!ego.contains("velocity") || !ego.at("velocity").is_array() ||
      ego.at("velocity").size() != 3) {
    throw SchemaError(sctx + ": 'ego.velocity' must be a 3-vector");
  }
  for (int i = 0; i < 3; ++i) {
    scene.ego.velocity[i] =
        get_double(ego.at("velocity").at(i), sctx + ": ego.velocity");
  }
  if (!ego.contains("heading_yaw")) {
    throw SchemaError(sctx + ": missing 'ego.heading_yaw'");
  }
  scene.ego.heading_yaw = normalize_radians(
      get_double(ego.at("heading_yaw"), sctx + ": ego.heading_yaw"));

  if (!j.contains("objects") || !j.at("objects").is_array()) {
    throw SchemaError(sctx + ": missing 'objects' array");
  }
  for (const json& obj : j.at("objects")) {
    SceneObject object;
    if (!obj.contains("id") || !obj.at("id").is_string()) {
      throw SchemaError(sctx + ": object record is missing string 'id'");
    }
    object.id = obj.at("id").get<std::string>();
    const std::string octx = sctx + ", object '" + object.id + "'";
    if (!obj.contains("category") || !obj.at("category").is_string()) {
      throw SchemaError(octx + ": missing string 'category'");
    }
    object.category = obj.at("category").get<std::string>();
    if (obj.contains("status")) {
      if (!obj.at("status").is_string()) {
        throw SchemaError(octx + ": 'status' must be a string");
      }
      object.status = obj.at("status").get<std::string>();
    }
    if (!obj.contains("box") || !obj.at("box").is_array() ||
        obj.at("box").size() != 7) {
      throw SchemaError(octx + ": 'box' must be [x,y,z,xs,ys,zs,yaw]");
    }
    const json& box = obj.at("box");
    object.box.x = get_double(box.at(0), octx + ": box");
    object.box.y = get_double(box.at(1), octx + ": box");
    object.box.z = get_double(box.at(2), octx + ": box");
    object.box.x_size = get_double(box.at(3), octx + ": box");
    object.box.y_size = get_double(box.at(4), octx + ": box");
    object.box.z_size = get_double(box.at(5), octx + ": box");
    object.box.yaw = normalize_radians(get_double(box.at(6), octx + ": box"));
    scene.objects.push_back(std::move(object));
  }

  validate_scene(scene, taxonomy);
  return scene;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Scene scene_from_text(std::string_view text, const Taxonomy& taxonomy) {
  return scene_from_json(parse_json(text), taxonomy);
}

std::vector<Scene> scenes_from_text(std::string_view text,
                                    const Taxonomy& taxonomy) {
  const json doc = parse_json(text);
  std::vector<Scene> scenes;
  if (doc.is_array()) {
    for (const json& record : doc) {
      scenes.push_back(scene_from_json(record, taxonomy));
    }
  } else {
    scenes.push_back(scene_from_json(doc, taxonomy));
  }
  return scenes;
}

std::vector<Scene> load_scenes_file(const std::filesystem::path& path,
                                    const Taxonomy& taxonomy) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scene file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return scenes_from_text(text, taxonomy);
  } catch (const Error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::vector<std::filesystem::path> list_scene_files(
    const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("scene directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<Scene> load_scenes_dir(const std::filesystem::path& dir,
                                   const Taxonomy& taxonomy) {
  std::vector<Scene> scenes;
  for (const auto& file : list_scene_files(dir)) {
    for (Scene& scene : load_scenes_file(file, taxonomy)) {
      scenes.push_back(std::move(scene));
    }
  }
  return scenes;
}

std::string scene_to_text(const Scene& scene) {
  ordered_json j;
  j["scene_id"] = scene.scene_id;
  j["ego"]["velocity"] = scene.ego.velocity;
  j["ego"]["heading_yaw"] = scene.ego.heading_yaw;
  j["objects"] = ordered_json::array();
  for (const SceneObject& obj : scene.objects) {
    ordered_json o;
    o["id"] = obj.id;
    o["category"] = obj.category;
    if (obj.has_status()) o["status"] = obj.status;
    o["box"] = {obj.box.x,      obj.box.y,      obj.box.z,  obj.box.x_size,
                obj.box.y_size, obj.box.z_size, obj.box.yaw};
    j["objects"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

void save_scene_file(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scene file " + path.string());
  out << scene_to_text(scene);
}

}  // namespace sceneqa
