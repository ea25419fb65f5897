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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "sceneqa/common.h"

namespace sceneqa {

void BEVConfig::validate() const {
  if (!(voxel_factor > 0.0)) {
    throw SchemaError("voxel_factor must be positive");
  }
  if (out_size_factor < 1) {
    throw SchemaError("out_size_factor must be a positive integer");
  }
  for (const auto& range : pc_range) {
    if (!(range[0] < range[1])) {
      throw SchemaError("pc_range min must be below max");
    }
    if (!std::isfinite(range[0]) || !std::isfinite(range[1])) {
      throw SchemaError("pc_range must be finite");
    }
  }
}

BEVGrid BEVGrid::zeros(int height, int width, int channels) {
  BEVGrid grid;
  grid.height = height;
  grid.width = width;
  grid.channels = channels;
  grid.data.assign(
      static_cast<std::size_t>(height) * width * channels, 0.0);
  return grid;
}

RotatedRect project_box_to_bev(const Box3D& box, const BEVConfig& config) {
  config.validate();
  const double cell = config.cell_size();
  RotatedRect rect;
  rect.center.x = (box.x - config.pc_range[0][0]) / cell;
  rect.center.y = (box.y - config.pc_range[1][0]) / cell;
  // Extents are lengths: they scale by the cell size without the range
  // shift. The heading angle passes through unchanged; z is dropped.
  rect.half_x = box.x_size / (2.0 * cell);
  rect.half_y = box.y_size / (2.0 * cell);
  rect.yaw = box.yaw;
  for (double v : {rect.center.x, rect.center.y, rect.half_x, rect.half_y}) {
    if (!std::isfinite(v)) {
      throw SchemaError("box projects to a non-finite grid coordinate");
    }
  }
  return rect;
}

std::array<Vec2, 4> rotated_vertices(const RotatedRect& rect) {
  // Corner offsets in counterclockwise order, rotated about the center.
  const std::array<Vec2, 4> offsets = {{
      {rect.half_x, rect.half_y},
      {-rect.half_x, rect.half_y},
      {-rect.half_x, -rect.half_y},
      {rect.half_x, -rect.half_y},
  }};
  std::array<Vec2, 4> vertices;
  for (int i = 0; i < 4; ++i) {
    vertices[i] = rect.center + rotate(offsets[i], rect.yaw);
  }
  return vertices;
}

bool contains(const RotatedRect& rect, Vec2 point) {
  const Vec2 d = point - rect.center;
  const Vec2 axis_x{std::cos(rect.yaw), std::sin(rect.yaw)};
  const Vec2 axis_y{-axis_x.y, axis_x.x};
  const double px = d.dot(axis_x);
  const double py = d.dot(axis_y);
  return px >= -rect.half_x && px <= rect.half_x && py >= -rect.half_y &&
         py <= rect.half_y;
}

RotatedRect circumscribed_rect(const RotatedRect& rect) {
  const auto vertices = rotated_vertices(rect);
  double min_x = vertices[0].x, max_x = vertices[0].x;
  double min_y = vertices[0].y, max_y = vertices[0].y;
  for (const Vec2& v : vertices) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  RotatedRect out;
  out.center = {(min_x + max_x) / 2.0, (min_y + max_y) / 2.0};
  out.half_x = (max_x - min_x) / 2.0;
  out.half_y = (max_y - min_y) / 2.0;
  out.yaw = 0.0;
  return out;
}

std::optional<ObjectEmbedding> crop_pool(const BEVGrid& grid,
                                         const RotatedRect& rect,
                                         PoolStrategy strategy) {
  // Only cells inside the circumscribed bounds can pass the membership test.
  const RotatedRect bounds = circumscribed_rect(rect);
  const int col0 = std::max(
      0, static_cast<int>(std::floor(bounds.center.x - bounds.half_x - 1.0)));
  const int col1 = std::min(
      grid.width - 1,
      static_cast<int>(std::ceil(bounds.center.x + bounds.half_x)));
  const int row0 = std::max(
      0, static_cast<int>(std::floor(bounds.center.y - bounds.half_y - 1.0)));
  const int row1 = std::min(
      grid.height - 1,
      static_cast<int>(std::ceil(bounds.center.y + bounds.half_y)));

  ObjectEmbedding pooled(grid.channels,
                         strategy == PoolStrategy::max
                             ? -std::numeric_limits<double>::infinity()
                             : 0.0);
  int cells = 0;
  for (int row = row0; row <= row1; ++row) {
    for (int col = col0; col <= col1; ++col) {
      const Vec2 center{col + 0.5, row + 0.5};
      if (!contains(rect, center)) continue;
      ++cells;
      for (int c = 0; c < grid.channels; ++c) {
        const double v = grid.at(row, col, c);
        if (strategy == PoolStrategy::max) {
          pooled[c] = std::max(pooled[c], v);
        } else {
          pooled[c] += v;
        }
      }
    }
  }
  if (cells == 0) return std::nullopt;
  if (strategy == PoolStrategy::mean) {
    for (double& v : pooled) v /= cells;
  }
  return pooled;
}

namespace {

constexpr char kGridDescriptorSuffix[] = ".json";

void write_u64(std::ofstream& out, std::uint64_t v) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = (v >> (8 * i)) & 0xffu;
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

std::uint64_t read_u64(std::ifstream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

void save_grid(const BEVGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write grid file " + path.string());
  write_u64(out, static_cast<std::uint64_t>(grid.height));
  write_u64(out, static_cast<std::uint64_t>(grid.width));
  write_u64(out, static_cast<std::uint64_t>(grid.channels));
  out.write(reinterpret_cast<const char*>(grid.data.data()),
            static_cast<std::streamsize>(grid.data.size() * sizeof(double)));
  if (!out) throw IoError("failed writing grid file " + path.string());

  nlohmann::ordered_json descriptor;
  descriptor["height"] = grid.height;
  descriptor["width"] = grid.width;
  descriptor["channels"] = grid.channels;
  descriptor["dtype"] = "float64";
  descriptor["layout"] = "row-major";
  descriptor["byte_order"] = "little-endian";
  std::ofstream desc(path.string() + kGridDescriptorSuffix);
  if (!desc) {
    throw IoError("cannot write grid descriptor for " + path.string());
  }
  desc << descriptor.dump(2) << "\n";
}

BEVGrid load_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open grid file " + path.string());
  BEVGrid grid;
  grid.height = static_cast<int>(read_u64(in));
  grid.width = static_cast<int>(read_u64(in));
  grid.channels = static_cast<int>(read_u64(in));
  if (!in || grid.height < 1 || grid.width < 1 || grid.channels < 1) {
    throw SchemaError("grid file " + path.string() + " has an invalid header");
  }
  const std::size_t count = static_cast<std::size_t>(grid.height) *
                            grid.width * grid.channels;
  grid.data.resize(count);
  in.read(reinterpret_cast<char*>(grid.data.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (!in) {
    throw SchemaError("grid file " + path.string() + " is truncated");
  }
  for (double v : grid.data) {
    if (!std::isfinite(v)) {
      throw SchemaError("grid file " + path.string() +
                        " contains non-finite values");
    }
  }
  return grid;
}

}  // namespace sceneqa
