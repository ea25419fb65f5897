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

#ifndef SCENEQA_BEV_H_
#define SCENEQA_BEV_H_

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

#include "sceneqa/geometry.h"
#include "sceneqa/scene.h"

namespace sceneqa {

// Scene-meters to feature-grid transform parameters. A scene coordinate maps
// to grid cells as (v - range_min) / (voxel_factor * out_size_factor); box
// extents scale by the same factor without the range shift; the heading
// angle passes through unchanged.
struct BEVConfig {
  double voxel_factor = 0.075;        // meters per voxel, planar
  int out_size_factor = 8;            // backbone stride, grid cells per cell
  std::array<std::array<double, 2>, 3> pc_range = {{
      {-54.0, 54.0},  // x min/max, meters
      {-54.0, 54.0},  // y
      {-5.0, 3.0},    // z
  }};

  double cell_size() const { return voxel_factor * out_size_factor; }
  // Throws SchemaError on non-positive factors or inverted ranges.
  void validate() const;
};

// Dense H x W x C feature grid. Row i spans y in [i, i+1) grid cells, column
// j spans x in [j, j+1); the center of cell (i, j) is (x, y) = (j+0.5,
// i+0.5). Storage is row-major (row, column, channel).
struct BEVGrid {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;

  static BEVGrid zeros(int height, int width, int channels);

  double at(int row, int col, int channel) const {
    return data[(static_cast<std::size_t>(row) * width + col) * channels +
                channel];
  }
  double& at(int row, int col, int channel) {
    return data[(static_cast<std::size_t>(row) * width + col) * channels +
                channel];
  }
};

// Oriented rectangle in grid coordinates.
struct RotatedRect {
  Vec2 center;
  double half_x = 0.0;  // half extent along the rect's own x axis, cells
  double half_y = 0.0;
  double yaw = 0.0;  // radians
};

using ObjectEmbedding = std::vector<double>;

enum class PoolStrategy { mean, max };

// Box footprint in grid coordinates: center and extents transformed with the
// range-min shift and cell-size division, z dropped, yaw copied unchanged.
// Throws SchemaError on a non-finite result.
RotatedRect project_box_to_bev(const Box3D& box, const BEVConfig& config);

// The four corners, counterclockwise: corner offsets (+-half_x, +-half_y)
// rotated by yaw about the center, then translated by the center.
std::array<Vec2, 4> rotated_vertices(const RotatedRect& rect);

// Dot-product membership test: both projections of (point - center) onto the
// rect's rotated unit axes lie within the half extents, boundary inclusive.
bool contains(const RotatedRect& rect, Vec2 point);

// Pools the channels of every cell whose center lies inside the rect.
// std::nullopt when no cell center is inside (empty region); the caller
// decides the fallback.
std::optional<ObjectEmbedding> crop_pool(const BEVGrid& grid,
                                         const RotatedRect& rect,
                                         PoolStrategy strategy);

// Tight axis-aligned bounding rect of the four rotated vertices (the
// circumscribed-box crop variant). Result has yaw 0.
RotatedRect circumscribed_rect(const RotatedRect& rect);

// Grid container: flat binary file (three little-endian uint64 header words
// H, W, C followed by H*W*C doubles, row-major) plus a JSON descriptor
// sidecar at "<path>.json".
void save_grid(const BEVGrid& grid, const std::filesystem::path& path);
BEVGrid load_grid(const std::filesystem::path& path);

}  // namespace sceneqa

#endif  // SCENEQA_BEV_H_
