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

#include "sceneqa/program.h"

#include <algorithm>

#include "sceneqa/common.h"
#include "sceneqa/relation.h"

namespace sceneqa {

namespace {

// Node-set value with enough provenance to detect vacuous relate questions:
// a set that came out of `relate` remembers its anchor and the filters
// applied since, so exist/count can ask "does the scene even contain a
// candidate other than the anchor".
struct SetVal {
  std::vector<int> items;  // ascending node indices
  int relate_anchor = -1;
  std::vector<std::pair<OpCode, std::string>> filters_since_relate;
};

struct Value {
  bool is_set = true;
  SetVal set;
  int object = -1;
};

bool status_matches(const SceneGraph& graph, int node,
                    const std::string& wanted) {
  if (wanted.empty()) return true;
  return graph.node_status(node) == wanted;
}

bool category_matches(const SceneGraph& graph, int node,
                      const std::string& wanted) {
  if (wanted == kThingCategory) return !graph.is_ego(node);
  return graph.node_category(node) == wanted;
}

std::vector<int> apply_filter(const SceneGraph& graph,
                              const std::vector<int>& items, OpCode code,
                              const std::string& value) {
  std::vector<int> out;
  out.reserve(items.size());
  for (int node : items) {
    const bool keep = code == OpCode::filter_status
                          ? status_matches(graph, node, value)
                          : category_matches(graph, node, value);
    if (keep) out.push_back(node);
  }
  return out;
}

std::vector<int> all_nodes(const SceneGraph& graph) {
  std::vector<int> nodes(graph.node_count());
  for (int i = 0; i < graph.node_count(); ++i) nodes[i] = i;
  return nodes;
}

// True when the scene-wide candidate set under the same filters is exactly
// the anchor singleton.
bool vacuous_relate_target(const SceneGraph& graph, const SetVal& set) {
  if (set.relate_anchor < 0) return false;
  std::vector<int> candidates = all_nodes(graph);
  for (const auto& [code, value] : set.filters_since_relate) {
    candidates = apply_filter(graph, candidates, code, value);
  }
  return candidates.size() == 1 && candidates[0] == set.relate_anchor;
}

}  // namespace

PartialOutcome execute_partial(const FunctionalProgram& program,
                               const Binding& binding,
                               const SceneGraph& graph) {
  PartialOutcome outcome;
  ExecResult& result = outcome.result;
  std::vector<Value> stack;

  auto failed = [&](ExecStatus status) {
    outcome.state = PartialOutcome::State::failed;
    outcome.fail_status = status;
    result.status = status;
    return outcome;
  };

  for (const ProgramOp& op : program.ops) {
    std::string arg_value;
    if (op.arg) {
      const std::string* bound = binding.find(*op.arg);
      if (!bound) {
        outcome.state = PartialOutcome::State::incomplete;
        return outcome;
      }
      arg_value = *bound;
    }

    switch (op.code) {
      case OpCode::scene: {
        Value v;
        v.set.items = all_nodes(graph);
        stack.push_back(std::move(v));
        break;
      }
      case OpCode::filter_status:
      case OpCode::filter_category: {
        SetVal& set = stack.back().set;
        set.items = apply_filter(graph, set.items, op.code, arg_value);
        if (set.relate_anchor >= 0) {
          set.filters_since_relate.emplace_back(op.code, arg_value);
        }
        break;
      }
      case OpCode::unique: {
        SetVal& set = stack.back().set;
        if (set.items.empty()) return failed(ExecStatus::empty_reference);
        if (set.items.size() > 1) {
          return failed(ExecStatus::non_unique_reference);
        }
        const int node = set.items[0];
        result.resolved_refs.push_back(node);
        stack.back().is_set = false;
        stack.back().object = node;
        break;
      }
      case OpCode::relate: {
        const int anchor = stack.back().object;
        const auto rel = relation_from_token(arg_value);
        if (!rel) {
          throw Error("binding holds unknown relation '" + arg_value + "'");
        }
        result.relate_calls.emplace_back(anchor, static_cast<int>(*rel));
        SetVal set;
        set.relate_anchor = anchor;
        for (int node = 0; node < graph.node_count(); ++node) {
          if (node == anchor) continue;
          if (graph.relation(anchor, node) == *rel) set.items.push_back(node);
        }
        stack.back().is_set = true;
        stack.back().object = -1;
        stack.back().set = std::move(set);
        break;
      }
      case OpCode::same_status_set: {
        const int ref = stack.back().object;
        const std::string& status = graph.node_status(ref);
        if (status.empty()) return failed(ExecStatus::missing_status);
        SetVal set;
        for (int node = 0; node < graph.node_count(); ++node) {
          if (node == ref || graph.is_ego(node)) continue;
          if (graph.node_status(node) == status) set.items.push_back(node);
        }
        stack.back().is_set = true;
        stack.back().object = -1;
        stack.back().set = std::move(set);
        break;
      }
      case OpCode::intersect: {
        SetVal right = std::move(stack.back().set);
        stack.pop_back();
        SetVal& left = stack.back().set;
        std::vector<int> merged;
        std::set_intersection(left.items.begin(), left.items.end(),
                              right.items.begin(), right.items.end(),
                              std::back_inserter(merged));
        left.items = std::move(merged);
        left.relate_anchor = -1;
        left.filters_since_relate.clear();
        break;
      }
      case OpCode::count: {
        const SetVal& set = stack.back().set;
        result.trivially_degenerate |= vacuous_relate_target(graph, set);
        result.answer = {AnswerType::integer,
                         std::to_string(set.items.size())};
        stack.pop_back();
        break;
      }
      case OpCode::exist: {
        const SetVal& set = stack.back().set;
        result.trivially_degenerate |= vacuous_relate_target(graph, set);
        result.answer = {AnswerType::boolean,
                         set.items.empty() ? "no" : "yes"};
        stack.pop_back();
        break;
      }
      case OpCode::query_category: {
        const int node = stack.back().object;
        result.answer = {AnswerType::category, graph.node_category(node)};
        stack.pop_back();
        break;
      }
      case OpCode::query_status: {
        const int node = stack.back().object;
        const std::string& status = graph.node_status(node);
        if (status.empty()) return failed(ExecStatus::missing_status);
        result.answer = {AnswerType::status, status};
        stack.pop_back();
        break;
      }
      case OpCode::compare_status_equal: {
        const int rhs = stack.back().object;
        stack.pop_back();
        const int lhs = stack.back().object;
        stack.pop_back();
        result.compared = {lhs, rhs};
        const std::string& ls = graph.node_status(lhs);
        const std::string& rs = graph.node_status(rhs);
        if (ls.empty() || rs.empty()) {
          return failed(ExecStatus::missing_status);
        }
        result.answer = {AnswerType::boolean, ls == rs ? "yes" : "no"};
        break;
      }
    }
  }

  outcome.state = PartialOutcome::State::complete;
  return outcome;
}

ExecResult execute_program(const FunctionalProgram& program,
                           const Binding& binding, const SceneGraph& graph) {
  PartialOutcome outcome = execute_partial(program, binding, graph);
  if (outcome.state == PartialOutcome::State::incomplete) {
    throw Error("binding does not cover the program's slots");
  }
  return outcome.result;
}

}  // namespace sceneqa
