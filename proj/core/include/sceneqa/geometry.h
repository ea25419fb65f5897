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

#ifndef SCENEQA_GEOMETRY_H_
#define SCENEQA_GEOMETRY_H_

#include <cmath>

namespace sceneqa {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  // z-component of the planar cross product; positive when `o` lies
  // counterclockwise of *this.
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

// Rotates `v` counterclockwise by `radians`.
inline Vec2 rotate(Vec2 v, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Normalizes to [-pi, pi).
inline double normalize_radians(double r) {
  double v = std::fmod(r + kPi, 2.0 * kPi);
  if (v < 0.0) v += 2.0 * kPi;
  return v - kPi;
}

// Normalizes to (-180, 180].
inline double normalize_degrees(double d) {
  double v = std::fmod(d + 180.0, 360.0);
  if (v <= 0.0) v += 360.0;
  return v - 180.0;
}

inline double degrees(double radians) { return radians * (180.0 / kPi); }
inline double radians(double degrees) { return degrees * (kPi / 180.0); }

}  // namespace sceneqa

#endif  // SCENEQA_GEOMETRY_H_
