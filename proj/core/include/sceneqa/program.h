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

#ifndef SCENEQA_PROGRAM_H_
#define SCENEQA_PROGRAM_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sceneqa/scene_graph.h"
#include "sceneqa/templates.h"

namespace sceneqa {

enum class ExecStatus {
  ok,
  non_unique_reference,  // unique over a set of size > 1
  empty_reference,       // unique over an empty set
  missing_status,        // status op over an object without a status
};

struct Answer {
  AnswerType type = AnswerType::boolean;
  std::string text;  // canonical: "yes"/"no", "0".."N", category, status
};

struct ExecResult {
  ExecStatus status = ExecStatus::ok;
  Answer answer;

  // Execution trace consumed by the rejection rules.
  std::vector<int> resolved_refs;  // nodes produced by `unique`, in op order
  std::optional<std::pair<int, int>> compared;  // compare_status_equal inputs
  std::vector<std::pair<int, int>> relate_calls;  // (anchor node, relation)
  // Set for exist/count over a relate-derived set whose scene-wide candidate
  // set is exactly the anchor singleton (the question is vacuous).
  bool trivially_degenerate = false;
};

// Deterministic program execution over a scene graph. The binding must cover
// every program slot. Failures (non-unique/empty references, missing status)
// are reported in `status`, not thrown: during generation they are ordinary
// rejections.
ExecResult execute_program(const FunctionalProgram& program,
                           const Binding& binding, const SceneGraph& graph);

// Prefix execution for DFS pruning: runs ops until one references a slot the
// partial binding does not cover.
struct PartialOutcome {
  enum class State {
    failed,      // an executed op failed; the whole subtree is rejected
    incomplete,  // ran out of bound slots before the terminal op
    complete,    // terminal op reached
  };
  State state = State::incomplete;
  ExecStatus fail_status = ExecStatus::ok;
  ExecResult result;  // valid when state == complete
};

PartialOutcome execute_partial(const FunctionalProgram& program,
                               const Binding& partial_binding,
                               const SceneGraph& graph);

}  // namespace sceneqa

#endif  // SCENEQA_PROGRAM_H_
