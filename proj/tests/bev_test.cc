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

#include "sceneqa/bev.h"

#include <cmath>

#include "doctest.h"
#include "sceneqa/common.h"
#include "support/oracles.h"
#include "support/synthetic.h"

namespace sceneqa {
namespace {

BEVGrid random_grid(Rng& rng, int h, int w, int c) {
  BEVGrid grid = BEVGrid::zeros(h, w, c);
  for (double& v : grid.data) v = rng.unit() * 20.0 - 10.0;
  return grid;
}

RotatedRect random_rect(Rng& rng, double span) {
  RotatedRect rect;
  rect.center = {rng.unit() * span, rng.unit() * span};
  rect.half_x = 0.3 + rng.unit() * 6.0;
  rect.half_y = 0.3 + rng.unit() * 6.0;
  rect.yaw = (rng.unit() * 2.0 - 1.0) * kPi;
  return rect;
}

TEST_CASE("projection follows the range shift and cell-size division") {
  BEVConfig config;
  config.voxel_factor = 0.075;
  config.out_size_factor = 8;
  config.pc_range = {{{-54.0, 54.0}, {-54.0, 54.0}, {-5.0, 3.0}}};

  Box3D box;
  box.x = 0.0;
  box.y = -54.0;
  box.z = 1.0;
  box.x_size = 1.2;
  box.y_size = 0.6;
  box.z_size = 2.0;
  box.yaw = 0.35;

  const RotatedRect rect = project_box_to_bev(box, config);
  CHECK(rect.center.x == 90.0);  // (0 - (-54)) / 0.6, exact in IEEE doubles
  CHECK(rect.center.y == 0.0);   // the range minimum maps to the grid origin
  CHECK(rect.half_x == doctest::Approx(1.0));  // 1.2 m at 0.6 m per cell
  CHECK(rect.half_y == doctest::Approx(0.5));
  CHECK(rect.yaw == 0.35);  // heading is not transformed
}

TEST_CASE("projection is affine in the scene coordinate") {
  BEVConfig config;
  const double slope = 1.0 / config.cell_size();
  Box3D box;
  box.x_size = box.y_size = box.z_size = 1.0;
  const double xs[3] = {-31.0, 0.0, 17.5};
  double mapped[3];
  for (int i = 0; i < 3; ++i) {
    box.x = xs[i];
    mapped[i] = project_box_to_bev(box, config).center.x;
  }
  for (int i = 1; i < 3; ++i) {
    const double measured = (mapped[i] - mapped[0]) / (xs[i] - xs[0]);
    CHECK(measured == doctest::Approx(slope).epsilon(1e-12));
  }
}

TEST_CASE("rotated vertices are counterclockwise corner offsets") {
  RotatedRect rect;
  rect.center = {3.0, 4.0};
  rect.half_x = 2.0;
  rect.half_y = 1.0;
  rect.yaw = 0.0;
  const auto v = rotated_vertices(rect);
  CHECK(v[0].x == doctest::Approx(5.0));
  CHECK(v[0].y == doctest::Approx(5.0));
  CHECK(v[1].x == doctest::Approx(1.0));
  CHECK(v[1].y == doctest::Approx(5.0));
  CHECK(v[2].x == doctest::Approx(1.0));
  CHECK(v[2].y == doctest::Approx(3.0));
  CHECK(v[3].x == doctest::Approx(5.0));
  CHECK(v[3].y == doctest::Approx(3.0));

  // A quarter turn moves the offset (1, 0) to (0, 1).
  const Vec2 turned = rotate({1.0, 0.0}, kPi / 2.0);
  CHECK(turned.x == doctest::Approx(0.0));
  CHECK(turned.y == doctest::Approx(1.0));

  // Unit square at 45 degrees: corners land on the axes.
  RotatedRect square;
  square.half_x = square.half_y = 0.5;
  square.yaw = kPi / 4.0;
  const auto sv = rotated_vertices(square);
  const double r = std::sqrt(2.0) / 2.0;
  CHECK(sv[0].x == doctest::Approx(0.0));
  CHECK(sv[0].y == doctest::Approx(r));
  CHECK(sv[1].x == doctest::Approx(-r));
  CHECK(sv[1].y == doctest::Approx(0.0));
  CHECK(sv[2].x == doctest::Approx(0.0));
  CHECK(sv[2].y == doctest::Approx(-r));
  CHECK(sv[3].x == doctest::Approx(r));
  CHECK(sv[3].y == doctest::Approx(0.0));
}

TEST_CASE("containment agrees with the polygon oracle") {
  Rng rng(606);
  RotatedRect rect = random_rect(rng, 10.0);
  CHECK(contains(rect, rect.center));
  const double reach = std::hypot(rect.half_x, rect.half_y);
  CHECK_FALSE(contains(rect, rect.center + Vec2{reach * 2.0, reach * 2.0}));

  int agreements = 0;
  for (int i = 0; i < 10000; ++i) {
    if (i % 100 == 0) rect = random_rect(rng, 10.0);
    const Vec2 p{rng.unit() * 24.0 - 7.0, rng.unit() * 24.0 - 7.0};
    const bool mine = contains(rect, p);
    const bool oracle =
        testing::polygon_contains(rotated_vertices(rect), p);
    REQUIRE(mine == oracle);
    ++agreements;
  }
  CHECK(agreements == 10000);
}

TEST_CASE("membership is symmetric under a half turn") {
  Rng rng(707);
  for (int i = 0; i < 200; ++i) {
    const RotatedRect rect = random_rect(rng, 8.0);
    RotatedRect flipped = rect;
    flipped.yaw = rect.yaw + kPi;
    const Vec2 p{rng.unit() * 20.0 - 6.0, rng.unit() * 20.0 - 6.0};
    CHECK(contains(rect, p) == contains(flipped, p));
  }
}

TEST_CASE("constant grids pool to the constant") {
  BEVGrid grid = BEVGrid::zeros(8, 8, 3);
  for (double& v : grid.data) v = 2.5;
  RotatedRect rect;
  rect.center = {4.0, 4.0};
  rect.half_x = 2.0;
  rect.half_y = 1.5;
  rect.yaw = 0.6;
  const auto mean = crop_pool(grid, rect, PoolStrategy::mean);
  REQUIRE(mean.has_value());
  for (double v : *mean) CHECK(v == doctest::Approx(2.5));
  const auto max = crop_pool(grid, rect, PoolStrategy::max);
  REQUIRE(max.has_value());
  for (double v : *max) CHECK(v == doctest::Approx(2.5));
}

TEST_CASE("axis-aligned rects reduce to plain window pooling") {
  Rng rng(808);
  BEVGrid grid = random_grid(rng, 6, 6, 4);
  // Exactly the 2x2 window of cells (0,0)..(1,1).
  RotatedRect rect;
  rect.center = {1.0, 1.0};
  rect.half_x = 1.0;
  rect.half_y = 1.0;
  rect.yaw = 0.0;

  const auto mean = crop_pool(grid, rect, PoolStrategy::mean);
  const auto max = crop_pool(grid, rect, PoolStrategy::max);
  REQUIRE(mean.has_value());
  REQUIRE(max.has_value());
  for (int c = 0; c < grid.channels; ++c) {
    const double values[4] = {grid.at(0, 0, c), grid.at(0, 1, c),
                              grid.at(1, 0, c), grid.at(1, 1, c)};
    const double window_mean =
        (values[0] + values[1] + values[2] + values[3]) / 4.0;
    const double window_max =
        std::max(std::max(values[0], values[1]),
                 std::max(values[2], values[3]));
    CHECK((*mean)[c] == doctest::Approx(window_mean).epsilon(1e-12));
    CHECK((*max)[c] == doctest::Approx(window_max).epsilon(1e-12));
  }
}

TEST_CASE("crop_pool matches the dense cell-center oracle") {
  Rng rng(909);
  for (int i = 0; i < 100; ++i) {
    const BEVGrid grid = random_grid(rng, 16, 16, 8);
    RotatedRect rect = random_rect(rng, 16.0);
    for (const PoolStrategy strategy :
         {PoolStrategy::mean, PoolStrategy::max}) {
      const auto mine = crop_pool(grid, rect, strategy);
      const auto oracle = testing::dense_pool_oracle(grid, rect, strategy);
      REQUIRE(mine.has_value() == oracle.has_value());
      if (!mine) continue;
      for (int c = 0; c < grid.channels; ++c) {
        CHECK(std::abs((*mine)[c] - (*oracle)[c]) < 1e-6);
      }
    }
  }
}

TEST_CASE("pooled values stay within the cropped range") {
  Rng rng(111);
  const BEVGrid grid = random_grid(rng, 16, 16, 4);
  const RotatedRect rect = random_rect(rng, 16.0);
  const auto mean = crop_pool(grid, rect, PoolStrategy::mean);
  const auto max = crop_pool(grid, rect, PoolStrategy::max);
  if (!mean) return;
  for (int c = 0; c < grid.channels; ++c) {
    double lo = 1e9, hi = -1e9;
    for (int row = 0; row < grid.height; ++row) {
      for (int col = 0; col < grid.width; ++col) {
        if (!contains(rect, {col + 0.5, row + 0.5})) continue;
        lo = std::min(lo, grid.at(row, col, c));
        hi = std::max(hi, grid.at(row, col, c));
      }
    }
    CHECK((*mean)[c] >= lo - 1e-12);
    CHECK((*mean)[c] <= hi + 1e-12);
    CHECK((*max)[c] == doctest::Approx(hi));
  }
}

TEST_CASE("empty regions are reported, not zero-filled") {
  const BEVGrid grid = BEVGrid::zeros(8, 8, 2);
  RotatedRect rect;
  rect.center = {1.0, 1.0};  // on the cell corner, clear of all centers
  rect.half_x = 0.2;
  rect.half_y = 0.2;
  rect.yaw = 0.0;
  CHECK_FALSE(crop_pool(grid, rect, PoolStrategy::mean).has_value());

  RotatedRect outside;
  outside.center = {100.0, 100.0};
  outside.half_x = outside.half_y = 1.0;
  CHECK_FALSE(crop_pool(grid, outside, PoolStrategy::mean).has_value());
}

TEST_CASE("circumscribed rects bound the rotated rect") {
  RotatedRect aligned;
  aligned.center = {2.0, 3.0};
  aligned.half_x = 1.5;
  aligned.half_y = 0.5;
  aligned.yaw = 0.0;
  const RotatedRect c0 = circumscribed_rect(aligned);
  CHECK(c0.half_x == doctest::Approx(1.5));
  CHECK(c0.half_y == doctest::Approx(0.5));

  RotatedRect square;
  square.center = {0.0, 0.0};
  square.half_x = square.half_y = 1.0;  // side 2
  square.yaw = kPi / 4.0;
  const RotatedRect c45 = circumscribed_rect(square);
  CHECK(2.0 * c45.half_x == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(2.0 * c45.half_y == doctest::Approx(2.0 * std::sqrt(2.0)));

  Rng rng(222);
  for (int i = 0; i < 100; ++i) {
    const RotatedRect rect = random_rect(rng, 10.0);
    const RotatedRect box = circumscribed_rect(rect);
    const Vec2 p{rng.unit() * 24.0 - 7.0, rng.unit() * 24.0 - 7.0};
    if (contains(rect, p)) CHECK(contains(box, p));
  }
}

TEST_CASE("grid files round-trip with a descriptor sidecar") {
  testing::TempDir dir;
  Rng rng(333);
  const BEVGrid grid = random_grid(rng, 5, 7, 3);
  const auto path = dir.path() / "grid.bin";
  save_grid(grid, path);
  CHECK(std::filesystem::exists(dir.path() / "grid.bin.json"));

  const BEVGrid loaded = load_grid(path);
  CHECK(loaded.height == 5);
  CHECK(loaded.width == 7);
  CHECK(loaded.channels == 3);
  REQUIRE(loaded.data.size() == grid.data.size());
  for (std::size_t i = 0; i < grid.data.size(); ++i) {
    CHECK(loaded.data[i] == grid.data[i]);
  }

  // Truncated payloads are rejected.
  std::filesystem::resize_file(path, 24 + 10 * sizeof(double));
  CHECK_THROWS_AS(load_grid(path), SchemaError);
}

TEST_CASE("config validation rejects nonsense") {
  BEVConfig config;
  config.voxel_factor = -1.0;
  CHECK_THROWS_AS(config.validate(), SchemaError);
  config = BEVConfig{};
  config.out_size_factor = 0;
  CHECK_THROWS_AS(config.validate(), SchemaError);
  config = BEVConfig{};
  config.pc_range[0] = {10.0, -10.0};
  CHECK_THROWS_AS(config.validate(), SchemaError);
}

}  // namespace
}  // namespace sceneqa
