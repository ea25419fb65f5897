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

#ifndef SCENEQA_RELATION_H_
#define SCENEQA_RELATION_H_

#include <optional>
#include <string>
#include <string_view>

#include "sceneqa/geometry.h"
#include "sceneqa/scene.h"

namespace sceneqa {

// The six ego-relative spatial relations. Enumerator order is the canonical
// serialization order; do not reorder.
enum class Relation {
  front = 0,
  front_left,
  front_right,
  back_left,
  back_right,
  back,
};

inline constexpr int kRelationCount = 6;

// Machine token, e.g. "front_left".
std::string_view relation_token(Relation r);
// Question-surface form, e.g. "front left".
std::string_view relation_display(Relation r);
std::optional<Relation> relation_from_token(std::string_view token);

// The 180-degree-opposed label: front<->back, front left<->back right,
// front right<->back left.
Relation complement(Relation r);

// Signed planar angle in degrees, normalized to (-180, 180].
struct SignedAngle {
  double deg = 0.0;

  static SignedAngle from_degrees(double d) {
    return SignedAngle{normalize_degrees(d)};
  }
};

// Planar velocities below this magnitude do not define a forward direction
// and fall back to the annotated heading.
inline constexpr double kMinForwardSpeed = 0.2;  // m/s
// Object centers closer than this are a degenerate pair.
inline constexpr double kMinPairDistance = 1e-6;  // m

// Unit forward direction of the ego vehicle: the normalized planar velocity
// when it is fast enough to be meaningful, else the heading yaw unit vector.
// Always well defined.
Vec2 forward_direction(const EgoState& ego);

// Signed angle from `forward` to (target - ref), counterclockwise positive.
// The displacement points from the reference object to the target so that the
// result reads "target is to the <relation> of ref".
// Throws SchemaError when the centers coincide (within kMinPairDistance).
SignedAngle signed_angle(Vec2 ref_center, Vec2 target_center, Vec2 forward);

// Six-way binning:
//   front       -30 < t <=  30
//   front left   30 < t <=  90
//   front right -90 < t <= -30
//   back left    90 < t <= 150
//   back right -150 < t <= -90
//   back        otherwise
// Total over (-180, 180]; comparisons are exact IEEE comparisons on degrees.
Relation bin_relation(SignedAngle angle);

// relation_between(ref, target, ego): the label such that "target is to the
// <label> of ref". Composition of the three functions above.
Relation relation_between(const SceneObject& ref, const SceneObject& target,
                          const EgoState& ego);
Relation relation_between(Vec2 ref_center, Vec2 target_center,
                          const EgoState& ego);

}  // namespace sceneqa

#endif  // SCENEQA_RELATION_H_
