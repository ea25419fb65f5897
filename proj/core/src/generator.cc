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

#include "sceneqa/generator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "sceneqa/common.h"
#include "sceneqa/relation.h"

namespace sceneqa {

std::string_view rejection_token(RejectionReason r) {
  switch (r) {
    case RejectionReason::non_unique_reference:
      return "non_unique_reference";
    case RejectionReason::empty_reference:
      return "empty_reference";
    case RejectionReason::blacklisted_combo:
      return "blacklisted_combo";
    case RejectionReason::count_over_cap:
      return "count_over_cap";
    case RejectionReason::trivial_degenerate:
      return "trivial_degenerate";
    case RejectionReason::missing_status:
      return "missing_status";
  }
  return "unknown";
}

namespace {

RejectionReason reason_for(ExecStatus status) {
  switch (status) {
    case ExecStatus::non_unique_reference:
      return RejectionReason::non_unique_reference;
    case ExecStatus::empty_reference:
      return RejectionReason::empty_reference;
    case ExecStatus::missing_status:
      return RejectionReason::missing_status;
    case ExecStatus::ok:
      break;
  }
  return RejectionReason::trivial_degenerate;  // unreachable
}

const Slot* paired_attribute(const QuestionTemplate& tmpl, Slot object_slot) {
  for (const auto& [attr, obj] : tmpl.attr_object_pairs) {
    if (obj == object_slot) return &attr;
  }
  return nullptr;
}

bool is_me_eligible(const QuestionTemplate& tmpl, Slot slot) {
  return std::find(tmpl.me_eligible.begin(), tmpl.me_eligible.end(), slot) !=
         tmpl.me_eligible.end();
}

}  // namespace

std::optional<RejectionReason> reject(const PairCandidate& candidate,
                                      const SceneGraph& /*graph*/,
                                      const GenerationConfig& config) {
  const QuestionTemplate& tmpl = *candidate.tmpl;
  const ExecResult& exec = candidate.exec;

  for (const auto& [attr_slot, obj_slot] : tmpl.attr_object_pairs) {
    const std::string* attr = candidate.binding.find(attr_slot);
    const std::string* obj = candidate.binding.find(obj_slot);
    if (attr && obj && config.blacklist.count({*attr, *obj})) {
      return RejectionReason::blacklisted_combo;
    }
  }

  if (exec.status != ExecStatus::ok) {
    return reason_for(exec.status);
  }

  if (exec.answer.type == AnswerType::integer &&
      std::stoi(exec.answer.text) > config.count_answer_cap) {
    return RejectionReason::count_over_cap;
  }

  if (config.reject_trivial_degenerate) {
    if (exec.trivially_degenerate) {
      return RejectionReason::trivial_degenerate;
    }
    // Comparing an object with itself.
    if (exec.compared && exec.compared->first == exec.compared->second) {
      return RejectionReason::trivial_degenerate;
    }
    // Two relate chains with the identical (anchor, relation) constraint.
    for (std::size_t i = 0; i < exec.relate_calls.size(); ++i) {
      for (std::size_t j = i + 1; j < exec.relate_calls.size(); ++j) {
        if (exec.relate_calls[i] == exec.relate_calls[j]) {
          return RejectionReason::trivial_degenerate;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Depth-first slot instantiation. All randomness is a pure function of
// (scene seed, template id, bound prefix): value orderings come from a hash
// of the path into the tree, so pruning one subtree never reshuffles
// another, emissions are reproducible across worker schedules, and growing
// the blacklist can only remove emissions.
class Instantiator {
 public:
  Instantiator(const SceneGraph& graph, const QuestionTemplate& tmpl,
               const Taxonomy& taxonomy, const GenerationConfig& config,
               std::uint64_t scene_seed, int budget, TemplateYield* yield)
      : graph_(graph),
        tmpl_(tmpl),
        taxonomy_(taxonomy),
        config_(config),
        budget_(budget),
        yield_(yield) {
    root_path_ = fnv1a(tmpl.template_id, fnv1a_u64(scene_seed));
  }

  std::vector<QAPair> run() {
    Binding binding;
    descend(binding, 0, root_path_);
    return std::move(pairs_);
  }

 private:
  void count_rejection(RejectionReason reason) {
    if (yield_) ++yield_->rejections[reason];
  }

  bool exhausted() const {
    return emitted_ >= std::min(config_.per_template_cap, budget_);
  }

  // Returns false once the emission budget is exhausted.
  bool descend(Binding& binding, std::size_t depth, std::uint64_t path) {
    const PartialOutcome outcome =
        execute_partial(tmpl_.program, binding, graph_);
    if (outcome.state == PartialOutcome::State::failed) {
      count_rejection(reason_for(outcome.fail_status));
      return true;
    }

    if (depth == tmpl_.slots.size()) {
      PairCandidate candidate{&tmpl_, binding, outcome.result};
      if (const auto reason = reject(candidate, graph_, config_)) {
        count_rejection(*reason);
        return true;
      }
      emit(binding, path, outcome.result);
      return !exhausted();
    }

    const Slot slot = tmpl_.slots[depth];
    for (const std::string& value : domain_for(slot, binding, path)) {
      if (slot.kind == SlotKind::object && value != kEgoCategory &&
          value != kThingCategory) {
        if (const Slot* attr = paired_attribute(tmpl_, slot)) {
          const std::string* bound = binding.find(*attr);
          if (bound && !bound->empty() &&
              config_.blacklist.count({*bound, value})) {
            count_rejection(RejectionReason::blacklisted_combo);
            continue;
          }
        }
      }
      Binding child = binding;
      child.set(slot, value);
      const std::uint64_t child_path =
          fnv1a(slot.token() + "=" + value, path);
      if (!descend(child, depth + 1, child_path)) return false;
    }
    return true;
  }

  std::vector<std::string> domain_for(Slot slot, const Binding& binding,
                                      std::uint64_t path) const {
    Rng rng(fnv1a("domain", path));
    std::vector<std::string> values;
    switch (slot.kind) {
      case SlotKind::attribute: {
        values = taxonomy_.statuses;
        rng.shuffle(values);
        // The unconstrained value: it leads the exploration order with the
        // configured probability, sits at a random later position otherwise,
        // and a probability of zero removes it entirely.
        if (config_.empty_attribute_prob > 0.0) {
          const std::size_t pos = rng.unit() < config_.empty_attribute_prob
                                      ? 0
                                      : 1 + rng.bounded(values.size());
          values.insert(values.begin() + pos, "");
        }
        break;
      }
      case SlotKind::object: {
        if (tmpl_.queried_object && *tmpl_.queried_object == slot) {
          values = {kThingCategory};
          break;
        }
        values = taxonomy_.categories;
        values.push_back(kThingCategory);
        if (is_me_eligible(tmpl_, slot)) {
          // The ego reference never carries a status constraint.
          const Slot* attr = paired_attribute(tmpl_, slot);
          const std::string* bound = attr ? binding.find(*attr) : nullptr;
          if (!bound || bound->empty()) values.push_back(kEgoCategory);
        }
        rng.shuffle(values);
        break;
      }
      case SlotKind::relation: {
        for (int i = 0; i < kRelationCount; ++i) {
          values.emplace_back(relation_token(static_cast<Relation>(i)));
        }
        rng.shuffle(values);
        break;
      }
    }
    return values;
  }

  void emit(const Binding& binding, std::uint64_t leaf_path,
            const ExecResult& exec) {
    QAPair pair;
    pair.scene_id = graph_.scene_id;
    pair.template_id = tmpl_.template_id;
    pair.variant_index = static_cast<int>(mix64(fnv1a("variant", leaf_path)) %
                                          tmpl_.variant_count());
    pair.hop = tmpl_.hop;
    pair.qtype = tmpl_.qtype;
    pair.binding = binding;
    pair.question = render(tmpl_, pair.variant_index, binding, taxonomy_);
    pair.answer = exec.answer.text;
    pair.question_id = to_hex16(
        fnv1a(pair.scene_id + "|" + pair.template_id + "|" +
              std::to_string(pair.variant_index) + "|" + binding.canonical()));
    pairs_.push_back(std::move(pair));
    ++emitted_;
    if (yield_) ++yield_->emitted;
  }

  const SceneGraph& graph_;
  const QuestionTemplate& tmpl_;
  const Taxonomy& taxonomy_;
  const GenerationConfig& config_;
  int budget_;
  TemplateYield* yield_;
  std::uint64_t root_path_ = 0;
  int emitted_ = 0;
  std::vector<QAPair> pairs_;
};

}  // namespace

std::vector<QAPair> instantiate(const SceneGraph& graph,
                                const QuestionTemplate& tmpl,
                                const Taxonomy& taxonomy,
                                const GenerationConfig& config,
                                std::uint64_t scene_seed, int budget,
                                TemplateYield* yield) {
  if (budget <= 0) return {};
  Instantiator instantiator(graph, tmpl, taxonomy, config, scene_seed, budget,
                            yield);
  return instantiator.run();
}

std::vector<QAPair> balance(std::vector<QAPair> pairs,
                            const GenerationConfig& config) {
  if (pairs.empty()) return pairs;

  std::vector<bool> keep(pairs.size(), true);
  for (int q = 0; q < kQTypeCount; ++q) {
    const QType qtype = static_cast<QType>(q);
    std::map<std::string, std::vector<std::size_t>> by_answer;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].qtype == qtype) by_answer[pairs[i].answer].push_back(i);
    }
    if (by_answer.empty()) continue;

    std::size_t min_freq = pairs.size();
    for (const auto& [answer, indices] : by_answer) {
      min_freq = std::min(min_freq, indices.size());
    }
    double cap = config.balance_cap;
    if (auto it = config.balance_cap_by_qtype.find(qtype);
        it != config.balance_cap_by_qtype.end()) {
      cap = it->second;
    }
    const auto limit =
        static_cast<std::size_t>(std::floor(cap * static_cast<double>(min_freq)));

    for (const auto& [answer, indices] : by_answer) {
      if (indices.size() <= limit) continue;
      // Seeded choice of survivors; output order stays the input order.
      Rng rng(fnv1a(answer, fnv1a(qtype_token(qtype),
                                  fnv1a("balance", fnv1a_u64(config.seed)))));
      std::vector<std::size_t> positions(indices.size());
      for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
      for (std::size_t i = 0; i < limit; ++i) {
        std::swap(positions[i], positions[i + rng.bounded(positions.size() - i)]);
      }
      for (std::size_t i = limit; i < positions.size(); ++i) {
        keep[indices[positions[i]]] = false;
      }
    }
  }

  std::vector<QAPair> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (keep[i]) out.push_back(std::move(pairs[i]));
  }
  return out;
}

bool in_train_split(std::string_view scene_id, double ratio) {
  const double u = (mix64(fnv1a(scene_id)) >> 11) * 0x1.0p-53;
  return u < ratio;
}

bool answer_in_space(std::string_view answer, const Taxonomy& taxonomy,
                     int count_cap) {
  if (answer == "yes" || answer == "no") return true;
  if (!answer.empty() &&
      std::all_of(answer.begin(), answer.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    const int value = std::stoi(std::string(answer));
    return value >= 0 && value <= count_cap;
  }
  const std::string text(answer);
  return taxonomy.has_category(text) || taxonomy.has_status(text);
}

namespace {

struct SceneOutput {
  std::vector<QAPair> pairs;
  std::map<std::string, TemplateYield> yields;
};

SceneOutput process_scene(const Scene& scene, const Registry& registry,
                          const Taxonomy& taxonomy,
                          const GenerationConfig& config) {
  SceneOutput out;
  // Empty scenes are valid input but there is nothing to ask about; even the
  // ego-anchored templates stay silent.
  if (scene.objects.empty()) return out;
  SceneGraph graph;
  try {
    graph = build_scene_graph(scene);
  } catch (const SchemaError& e) {
    throw SchemaError("scene '" + scene.scene_id + "': " + e.what());
  }
  const std::uint64_t scene_seed =
      fnv1a(scene.scene_id, fnv1a_u64(config.seed));

  int remaining = config.max_pairs_per_scene;
  for (const QuestionTemplate& tmpl : registry.templates) {
    if (remaining <= 0) break;
    TemplateYield& yield = out.yields[tmpl.template_id];
    std::vector<QAPair> pairs =
        instantiate(graph, tmpl, taxonomy, config, scene_seed, remaining,
                    &yield);
    remaining -= static_cast<int>(pairs.size());
    for (QAPair& p : pairs) out.pairs.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Dataset generate_dataset(const std::vector<Scene>& scenes,
                         const Registry& registry, const Taxonomy& taxonomy,
                         const GenerationConfig& config, int workers) {
  {
    std::set<std::string> ids;
    for (const Scene& scene : scenes) {
      if (!ids.insert(scene.scene_id).second) {
        throw SchemaError("duplicate scene_id '" + scene.scene_id + "'");
      }
    }
  }

  std::vector<SceneOutput> outputs(scenes.size());
  const int thread_count =
      std::max(1, std::min<int>(workers, static_cast<int>(scenes.size())));
  if (thread_count <= 1) {
    for (std::size_t i = 0; i < scenes.size(); ++i) {
      outputs[i] = process_scene(scenes[i], registry, taxonomy, config);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= scenes.size()) return;
        try {
          outputs[i] = process_scene(scenes[i], registry, taxonomy, config);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  Dataset dataset;
  GenerationReport& report = dataset.report;
  report.scene_count = static_cast<int>(scenes.size());

  std::vector<QAPair> merged;
  for (SceneOutput& out : outputs) {
    for (QAPair& p : out.pairs) merged.push_back(std::move(p));
    for (const auto& [id, yield] : out.yields) {
      TemplateYield& total = report.per_template[id];
      total.emitted += yield.emitted;
      for (const auto& [reason, count] : yield.rejections) {
        total.rejections[reason] += count;
        report.rejections[reason] += count;
      }
    }
  }
  report.emitted = static_cast<int>(merged.size());

  std::vector<QAPair> balanced = balance(std::move(merged), config);
  report.after_balance = static_cast<int>(balanced.size());

  for (QAPair& pair : balanced) {
    if (in_train_split(pair.scene_id, config.split_ratio)) {
      dataset.train.push_back(std::move(pair));
    } else {
      dataset.test.push_back(std::move(pair));
    }
  }
  report.train_count = static_cast<int>(dataset.train.size());
  report.test_count = static_cast<int>(dataset.test.size());
  return dataset;
}

}  // namespace sceneqa
