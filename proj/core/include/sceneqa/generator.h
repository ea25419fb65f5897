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

#ifndef SCENEQA_GENERATOR_H_
#define SCENEQA_GENERATOR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sceneqa/program.h"
#include "sceneqa/scene_graph.h"
#include "sceneqa/templates.h"

namespace sceneqa {

enum class RejectionReason {
  non_unique_reference,
  empty_reference,
  blacklisted_combo,
  count_over_cap,
  trivial_degenerate,
  missing_status,
};

std::string_view rejection_token(RejectionReason r);

struct GenerationConfig {
  std::uint64_t seed = 0;
  // Emitted-pair budget per scene across all templates. The default admits
  // every registry template at its own cap.
  int max_pairs_per_scene = 512;
  // DFS budget: emitted candidates per (scene, template) before moving on.
  int per_template_cap = 32;
  // Chance that an attribute slot's value order starts with the
  // unconstrained (empty) value.
  double empty_attribute_prob = 0.3;
  // Counting answers above this are dropped.
  int count_answer_cap = 10;
  // Post-hoc balancing: per qtype, every answer frequency is capped at
  // floor(cap * min observed frequency).
  double balance_cap = 1.5;
  std::map<QType, double> balance_cap_by_qtype;  // optional overrides
  // Scene-id-hash split, train share.
  double split_ratio = 0.82;
  // Nonsense (status, category) pairs, e.g. ("standing", "car").
  std::set<std::pair<std::string, std::string>> blacklist;
  // Rejection policy flag. Execution failures (non-unique/empty references,
  // missing status) always reject: those candidates have no answer.
  bool reject_trivial_degenerate = true;
};

struct QAPair {
  std::string question_id;
  std::string scene_id;
  std::string template_id;
  int variant_index = 0;
  int hop = 0;
  QType qtype = QType::exist;
  std::string question;
  std::string answer;
  Binding binding;
};

// A fully bound, executed instantiation awaiting the rejection rules.
struct PairCandidate {
  const QuestionTemplate* tmpl = nullptr;
  Binding binding;
  ExecResult exec;
};

// Applies the rejection rules to an executed candidate. std::nullopt means
// the candidate may be emitted.
std::optional<RejectionReason> reject(const PairCandidate& candidate,
                                      const SceneGraph& graph,
                                      const GenerationConfig& config);

struct TemplateYield {
  int emitted = 0;
  std::map<RejectionReason, int> rejections;  // prune events count once
};

// Depth-first instantiation of one template against one graph. Slot values
// are explored in taxonomy order shuffled per tree node; the shuffle derives
// from (scene_seed, template, bound prefix) only, so pruning one subtree
// never perturbs another and results are independent of scheduling.
// `budget` caps emissions (pass the remaining per-scene allowance).
std::vector<QAPair> instantiate(const SceneGraph& graph,
                                const QuestionTemplate& tmpl,
                                const Taxonomy& taxonomy,
                                const GenerationConfig& config,
                                std::uint64_t scene_seed, int budget,
                                TemplateYield* yield = nullptr);

// Seeded down-sampling so that per qtype no answer frequency exceeds
// cap * (minimum observed frequency). Output preserves input order.
std::vector<QAPair> balance(std::vector<QAPair> pairs,
                            const GenerationConfig& config);

// True when the scene falls in the train split. Depends only on the scene id
// and the ratio.
bool in_train_split(std::string_view scene_id, double ratio);

// Checks the answer-space contract: yes/no, 0..count_cap, a taxonomy
// category, or a taxonomy status.
bool answer_in_space(std::string_view answer, const Taxonomy& taxonomy,
                     int count_cap = 10);

struct GenerationReport {
  int scene_count = 0;
  int emitted = 0;
  int after_balance = 0;
  int train_count = 0;
  int test_count = 0;
  std::map<std::string, TemplateYield> per_template;
  std::map<RejectionReason, int> rejections;
};

struct Dataset {
  std::vector<QAPair> train;
  std::vector<QAPair> test;
  GenerationReport report;
};

// Full pipeline: per-scene graph construction and instantiation (scene-level
// parallelism over `workers` threads; per-scene seeds derive from
// (config.seed, scene_id)), deterministic ordered merge, balancing, split.
// Byte-identical output for a fixed (scenes, registry, config, seed)
// regardless of worker count.
Dataset generate_dataset(const std::vector<Scene>& scenes,
                         const Registry& registry, const Taxonomy& taxonomy,
                         const GenerationConfig& config, int workers = 1);

}  // namespace sceneqa

#endif  // SCENEQA_GENERATOR_H_
