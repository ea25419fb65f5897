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

#ifndef SCENEQA_TEMPLATES_H_
#define SCENEQA_TEMPLATES_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sceneqa/scene.h"

namespace sceneqa {

enum class SlotKind { attribute, object, relation };

// A typed template parameter: A, A2, A3..., O, O2..., R, R2. Index 1 renders
// without a digit.
struct Slot {
  SlotKind kind = SlotKind::attribute;
  int index = 1;

  std::string token() const;
  static std::optional<Slot> parse(std::string_view token);

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

enum class QType { exist, count, query_object, query_status, comparison };
enum class AnswerType { boolean, integer, category, status };

std::string_view qtype_token(QType q);
std::optional<QType> qtype_from_token(std::string_view token);
AnswerType answer_type_for(QType q);
inline constexpr int kQTypeCount = 5;

// Primitive operations of the answer-inference programs. Programs run on a
// small value stack: `scene` pushes the full node set, set/object transforms
// replace the top of the stack, `intersect` and `compare_status_equal`
// consume two values, and the terminal op produces the typed answer.
enum class OpCode {
  scene,                 // () -> Set
  filter_status,         // Set -> Set   (arg: attribute slot; "" keeps all)
  filter_category,       // Set -> Set   (arg: object slot)
  relate,                // Object -> Set (arg: relation slot)
  unique,                // Set -> Object; fails unless |set| == 1
  same_status_set,       // Object -> Set of other objects with equal status
  intersect,             // (Set, Set) -> Set
  count,                 // Set -> integer answer
  exist,                 // Set -> boolean answer
  query_category,        // Object -> category answer
  query_status,          // Object -> status answer
  compare_status_equal,  // (Object, Object) -> boolean answer
};

struct ProgramOp {
  OpCode code;
  std::optional<Slot> arg;

  std::string token() const;
};

struct FunctionalProgram {
  std::vector<ProgramOp> ops;
};

// One piece of a tokenized variant: either literal text or a slot reference
// (optionally pluralized, for "<O>s").
struct VariantSegment {
  std::string literal;
  std::optional<Slot> slot;
  bool plural = false;
};

struct QuestionTemplate {
  std::string template_id;
  QType qtype = QType::exist;
  int hop = 0;
  AnswerType answer_type = AnswerType::boolean;
  FunctionalProgram program;

  std::vector<std::string> variant_texts;  // raw placeholder strings
  std::vector<std::vector<VariantSegment>> variants;

  // Slots in declaration order (order of first appearance in the program).
  std::vector<Slot> slots;
  // Object slots whose unique reference anchors a `relate`; only these may
  // bind the ego value "me".
  std::vector<Slot> me_eligible;
  // The object slot whose category is the answer of a query_category
  // program; restricted to the wildcard "thing" during generation.
  std::optional<Slot> queried_object;
  // (attribute, object) slot pairs as they appear in filter chains; used for
  // blacklist checks.
  std::vector<std::pair<Slot, Slot>> attr_object_pairs;

  int variant_count() const { return static_cast<int>(variants.size()); }
};

struct Registry {
  std::vector<QuestionTemplate> templates;

  const QuestionTemplate* find(std::string_view template_id) const;
  int total_variants() const;
};

// Parses the line-structured registry format:
//
//   template <id>
//   qtype <exist|count|query_object|query_status|comparison>
//   hop <0|1>
//   program <op> <op(SLOT)> ...
//   variant <text with <SLOT> placeholders>
//   end
//
// '#' lines and blank lines are ignored. Throws ParseError on unknown
// placeholders, dangling slots, ill-typed programs, duplicate ids, or a hop
// count inconsistent with the program.
Registry parse_registry_text(std::string_view text);
Registry parse_registry_file(const std::filesystem::path& path);

// Canonical serialization; parse_registry_text(registry_to_text(r)) == r and
// the shipped registry file round-trips byte-identically.
std::string registry_to_text(const Registry& registry);

// The registry shipped with the library (embedded copy of
// data/question_templates.txt).
const std::string& default_registry_text();
Registry default_registry();

// Slot assignment for one question instance. Attribute slots may hold "" (no
// status constraint); object slots hold a category, "thing", or — for
// relate-anchor slots only — "me"; relation slots hold relation tokens.
class Binding {
 public:
  void set(Slot slot, std::string value);
  const std::string* find(Slot slot) const;
  const std::string& at(Slot slot) const;
  bool covers(const std::vector<Slot>& slots) const;
  std::size_t size() const { return values_.size(); }

  // "A=moving;O=car;R=front_left;..." in slot order; hashing/debug form.
  std::string canonical() const;

  const std::vector<std::pair<Slot, std::string>>& items() const {
    return values_;
  }

 private:
  std::vector<std::pair<Slot, std::string>> values_;  // sorted by slot
};

// Renders a bound variant into question text: placeholder substitution,
// pluralization, empty-attribute collapse, and the ego determiner rewrites
// ("the me" -> "me", "a me" -> "me", "me's" -> "my"). Throws Error on an
// incomplete binding. The result contains no placeholders, no double spaces
// and no banned ego expressions.
std::string render(const QuestionTemplate& tmpl, int variant_index,
                   const Binding& binding, const Taxonomy& taxonomy);

}  // namespace sceneqa

#endif  // SCENEQA_TEMPLATES_H_
