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

#include "doctest.h"
#include "json.hpp"
#include "sceneqa/common.h"
#include "sceneqa/scene_graph.h"
#include "sceneqa/scene_io.h"
#include "support/synthetic.h"

namespace sceneqa {
namespace {

const char* kValidScene = R"({
  "scene_id": "t-1",
  "ego": {"velocity": [4.0, 0.0, 0.0], "heading_yaw": 0.0},
  "objects": [
    {"id": "a", "category": "car", "status": "moving",
     "box": [10.0, 1.0, 0.5, 4.5, 1.9, 1.6, 0.25]},
    {"id": "b", "category": "traffic cone",
     "box": [-6.0, 3.5, 0.0, 0.3, 0.3, 0.8, 0.0]}
  ]
})";

TEST_CASE("a valid record loads into a typed scene") {
  const Scene scene = scene_from_text(kValidScene, Taxonomy::defaults());
  CHECK(scene.scene_id == "t-1");
  REQUIRE(scene.objects.size() == 2);
  CHECK(scene.objects[0].category == "car");
  CHECK(scene.objects[0].status == "moving");
  CHECK(scene.objects[1].has_status() == false);
  CHECK(scene.objects[1].box.x == -6.0);
}

TEST_CASE("duplicate object ids are rejected") {
  const char* text = R"({
    "scene_id": "t-dup",
    "ego": {"velocity": [0,0,0], "heading_yaw": 0},
    "objects": [
      {"id": "a", "category": "car", "box": [1,1,0,4,2,1.5,0]},
      {"id": "a", "category": "bus", "box": [9,2,0,11,3,3.4,0]}
    ]
  })";
  CHECK_THROWS_WITH_AS(scene_from_text(text, Taxonomy::defaults()),
                       doctest::Contains("duplicate id"), SchemaError);
}

TEST_CASE("degenerate boxes are rejected") {
  const char* text = R"({
    "scene_id": "t-degen",
    "ego": {"velocity": [0,0,0], "heading_yaw": 0},
    "objects": [{"id": "a", "category": "car", "box": [1,1,0,0.0,2,1.5,0]}]
  })";
  CHECK_THROWS_WITH_AS(scene_from_text(text, Taxonomy::defaults()),
                       doctest::Contains("degenerate box"), SchemaError);
}

TEST_CASE("unknown labels are reported, not dropped") {
  const char* bad_category = R"({
    "scene_id": "t-cat",
    "ego": {"velocity": [0,0,0], "heading_yaw": 0},
    "objects": [{"id": "a", "category": "spaceship", "box": [1,1,0,4,2,1.5,0]}]
  })";
  CHECK_THROWS_WITH_AS(scene_from_text(bad_category, Taxonomy::defaults()),
                       doctest::Contains("unknown category 'spaceship'"),
                       SchemaError);

  const char* bad_status = R"({
    "scene_id": "t-status",
    "ego": {"velocity": [0,0,0], "heading_yaw": 0},
    "objects": [{"id": "a", "category": "car", "status": "flying",
                 "box": [1,1,0,4,2,1.5,0]}]
  })";
  CHECK_THROWS_WITH_AS(scene_from_text(bad_status, Taxonomy::defaults()),
                       doctest::Contains("unknown status"), SchemaError);
}

TEST_CASE("missing fields and malformed boxes are schema errors") {
  CHECK_THROWS_AS(scene_from_text(R"({"scene_id": "x"})",
                                  Taxonomy::defaults()),
                  SchemaError);
  CHECK_THROWS_AS(
      scene_from_text(
          R"({"scene_id":"x","ego":{"velocity":[0,0,0],"heading_yaw":0},
              "objects":[{"id":"a","category":"car","box":[1,2,3]}]})",
          Taxonomy::defaults()),
      SchemaError);
  CHECK_THROWS_AS(scene_from_text("not json", Taxonomy::defaults()),
                  ParseError);
}

TEST_CASE("non-finite coordinates fail validation") {
  Scene scene;
  scene.scene_id = "t-nan";
  SceneObject obj;
  obj.id = "a";
  obj.category = "car";
  obj.box = {std::nan(""), 0, 0, 4, 2, 1.5, 0};
  scene.objects.push_back(obj);
  CHECK_THROWS_WITH_AS(validate_scene(scene, Taxonomy::defaults()),
                       doctest::Contains("non-finite"), SchemaError);
}

TEST_CASE("ingestion round-trips and is field-order insensitive") {
  const Scene scene = scene_from_text(kValidScene, Taxonomy::defaults());
  const std::string serialized = scene_to_text(scene);
  const Scene reloaded = scene_from_text(serialized, Taxonomy::defaults());
  CHECK(scene_to_text(reloaded) == serialized);
  CHECK(nlohmann::json::parse(serialized) ==
        nlohmann::json::parse(scene_to_text(reloaded)));

  // Same record with reordered keys parses to the same scene.
  const char* reordered = R"({
    "objects": [
      {"box": [10.0, 1.0, 0.5, 4.5, 1.9, 1.6, 0.25], "status": "moving",
       "category": "car", "id": "a"},
      {"category": "traffic cone", "id": "b",
       "box": [-6.0, 3.5, 0.0, 0.3, 0.3, 0.8, 0.0]}
    ],
    "ego": {"heading_yaw": 0.0, "velocity": [4.0, 0.0, 0.0]},
    "scene_id": "t-1"
  })";
  CHECK(scene_to_text(scene_from_text(reordered, Taxonomy::defaults())) ==
        serialized);
}

TEST_CASE("scene array files load in order") {
  const char* text = R"([
    {"scene_id": "s1", "ego": {"velocity": [0,0,0], "heading_yaw": 0},
     "objects": []},
    {"scene_id": "s2", "ego": {"velocity": [0,0,0], "heading_yaw": 0},
     "objects": []}
  ])";
  const auto scenes = scenes_from_text(text, Taxonomy::defaults());
  REQUIRE(scenes.size() == 2);
  CHECK(scenes[0].scene_id == "s1");
  CHECK(scenes[1].scene_id == "s2");
}

TEST_CASE("graph of an empty scene is the ego node alone") {
  Scene scene;
  scene.scene_id = "empty";
  const SceneGraph graph = build_scene_graph(scene);
  CHECK(graph.node_count() == 1);
  CHECK(graph.node_category(SceneGraph::kEgoNode) == "me");
  CHECK(graph.edges.size() == 1);  // n*n slots, diagonal unused
}

TEST_CASE("graph edge counts are complete over ordered pairs") {
  const Scene two = testing::make_scene(11, 2, 2);
  const SceneGraph g2 = build_scene_graph(two);
  CHECK(g2.node_count() == 3);
  int labeled = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) ++labeled;
    }
  }
  CHECK(labeled == 6);

  const Scene five = testing::make_scene(12, 5, 5);
  const SceneGraph g5 = build_scene_graph(five);
  CHECK(g5.node_count() == 6);
  // Brute-force pairwise complement check over all 30 directed edges.
  for (int i = 0; i < g5.node_count(); ++i) {
    for (int j = 0; j < g5.node_count(); ++j) {
      if (i == j) continue;
      CHECK(complement(g5.relation(i, j)) == g5.relation(j, i));
    }
  }
}

TEST_CASE("graph construction is deterministic") {
  const Scene scene = testing::make_scene(77, 8, 16);
  const SceneGraph a = build_scene_graph(scene);
  const SceneGraph b = build_scene_graph(scene);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i] == b.edges[i]);
  }
}

}  // namespace
}  // namespace sceneqa
