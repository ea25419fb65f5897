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

#include "sceneqa/relation.h"

#include <cmath>

#include "sceneqa/common.h"

namespace sceneqa {

namespace {

constexpr std::string_view kTokens[kRelationCount] = {
    "front", "front_left", "front_right", "back_left", "back_right", "back",
};
constexpr std::string_view kDisplay[kRelationCount] = {
    "front", "front left", "front right", "back left", "back right", "back",
};

}  // namespace

std::string_view relation_token(Relation r) {
  return kTokens[static_cast<int>(r)];
}

std::string_view relation_display(Relation r) {
  return kDisplay[static_cast<int>(r)];
}

std::optional<Relation> relation_from_token(std::string_view token) {
  for (int i = 0; i < kRelationCount; ++i) {
    if (kTokens[i] == token) return static_cast<Relation>(i);
  }
  return std::nullopt;
}

Relation complement(Relation r) {
  switch (r) {
    case Relation::front:
      return Relation::back;
    case Relation::back:
      return Relation::front;
    case Relation::front_left:
      return Relation::back_right;
    case Relation::back_right:
      return Relation::front_left;
    case Relation::front_right:
      return Relation::back_left;
    case Relation::back_left:
      return Relation::front_right;
  }
  return Relation::front;  // unreachable
}

Vec2 forward_direction(const EgoState& ego) {
  const Vec2 planar{ego.velocity[0], ego.velocity[1]};
  const double speed = planar.norm();
  if (speed > kMinForwardSpeed) {
    return {planar.x / speed, planar.y / speed};
  }
  return {std::cos(ego.heading_yaw), std::sin(ego.heading_yaw)};
}

SignedAngle signed_angle(Vec2 ref_center, Vec2 target_center, Vec2 forward) {
  const Vec2 d = target_center - ref_center;
  if (d.norm() < kMinPairDistance) {
    throw SchemaError("degenerate pair: coincident object centers");
  }
  // atan2 of (cross, dot) gives the signed rotation from `forward` to the
  // displacement; acos of the normalized dot would only recover |angle|.
  const double rad = std::atan2(forward.cross(d), forward.dot(d));
  return SignedAngle::from_degrees(degrees(rad));
}

Relation bin_relation(SignedAngle angle) {
  const double t = angle.deg;
  if (t > -30.0 && t <= 30.0) return Relation::front;
  if (t > 30.0 && t <= 90.0) return Relation::front_left;
  if (t > -90.0 && t <= -30.0) return Relation::front_right;
  if (t > 90.0 && t <= 150.0) return Relation::back_left;
  if (t > -150.0 && t <= -90.0) return Relation::back_right;
  return Relation::back;
}

Relation relation_between(Vec2 ref_center, Vec2 target_center,
                          const EgoState& ego) {
  return bin_relation(
      signed_angle(ref_center, target_center, forward_direction(ego)));
}

Relation relation_between(const SceneObject& ref, const SceneObject& target,
                          const EgoState& ego) {
  return relation_between(ref.box.center2d(), target.box.center2d(), ego);
}

}  // namespace sceneqa
