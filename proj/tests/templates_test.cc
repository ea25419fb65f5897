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

#include "sceneqa/templates.h"

#include <set>

#include "doctest.h"
#include "sceneqa/common.h"
#include "sceneqa/dataset_io.h"

namespace sceneqa {
namespace {

Binding bind(std::initializer_list<std::pair<const char*, const char*>> kv) {
  Binding b;
  for (const auto& [token, value] : kv) {
    b.set(*Slot::parse(token), value);
  }
  return b;
}

TEST_CASE("the shipped registry has the advertised shape") {
  const Registry registry = default_registry();
  CHECK(registry.templates.size() == 16);
  CHECK(registry.total_variants() == 66);

  std::set<QType> qtypes;
  std::set<int> hops;
  for (const auto& t : registry.templates) {
    qtypes.insert(t.qtype);
    hops.insert(t.hop);
  }
  CHECK(qtypes.size() == 5);
  CHECK(hops == std::set<int>{0, 1});
}

TEST_CASE("the registry file round-trips byte-identically") {
  const std::string path =
      std::string(SCENEQA_DATA_DIR) + "/question_templates.txt";
  const std::string original = read_text_file(path);
  const Registry registry = parse_registry_text(original);
  CHECK(registry_to_text(registry) == original);
  CHECK(original == default_registry_text());
}

TEST_CASE("parsing extracts slots, hops, and qtypes") {
  const Registry registry = default_registry();

  const QuestionTemplate* exist = registry.find("exist_relate");
  REQUIRE(exist != nullptr);
  CHECK(exist->qtype == QType::exist);
  CHECK(exist->hop == 1);
  CHECK(exist->answer_type == AnswerType::boolean);
  REQUIRE(exist->slots.size() == 5);
  CHECK(exist->slots[0].token() == "A");
  CHECK(exist->slots[1].token() == "O");
  CHECK(exist->slots[2].token() == "R");
  CHECK(exist->slots[3].token() == "A2");
  CHECK(exist->slots[4].token() == "O2");
  REQUIRE(exist->me_eligible.size() == 1);
  CHECK(exist->me_eligible[0].token() == "O");

  const QuestionTemplate* count = registry.find("count_basic");
  REQUIRE(count != nullptr);
  CHECK(count->qtype == QType::count);
  CHECK(count->hop == 0);
  CHECK(count->slots.size() == 2);
  CHECK(count->me_eligible.empty());

  const QuestionTemplate* qobj = registry.find("query_object_two_relate");
  REQUIRE(qobj != nullptr);
  CHECK(qobj->hop == 1);  // two relates still count as one hop
  REQUIRE(qobj->queried_object.has_value());
  CHECK(qobj->queried_object->token() == "O3");
  CHECK(qobj->me_eligible.size() == 2);
}

TEST_CASE("dangling and malformed registries fail to parse") {
  const char* dangling = R"(template t1
qtype exist
hop 0
program scene filter_status(A) filter_category(O) exist
variant Are there any <A> <O>s to the <R2> of it?
end
)";
  CHECK_THROWS_WITH_AS(parse_registry_text(dangling),
                       doctest::Contains("dangling placeholder"), ParseError);

  const char* unreferenced = R"(template t1
qtype exist
hop 0
program scene filter_status(A) filter_category(O) exist
variant Are there any <O>s?
end
)";
  CHECK_THROWS_WITH_AS(parse_registry_text(unreferenced),
                       doctest::Contains("does not reference"), ParseError);

  const char* duplicate = R"(template t1
qtype exist
hop 0
program scene filter_status(A) filter_category(O) exist
variant Are there any <A> <O>s?
end

template t1
qtype exist
hop 0
program scene filter_status(A) filter_category(O) exist
variant Are there any <A> <O>s?
end
)";
  CHECK_THROWS_WITH_AS(parse_registry_text(duplicate),
                       doctest::Contains("duplicate template_id"), ParseError);

  const char* unknown_op = R"(template t1
qtype exist
hop 0
program scene warp(A) exist
variant Hello <A>?
end
)";
  CHECK_THROWS_WITH_AS(parse_registry_text(unknown_op),
                       doctest::Contains("unknown op"), ParseError);

  const char* ill_typed = R"(template t1
qtype exist
hop 0
program scene unique exist
variant Anything <A>?
end
)";
  CHECK_THROWS_AS(parse_registry_text(ill_typed), ParseError);

  const char* wrong_hop = R"(template t1
qtype exist
hop 0
program scene filter_status(A) filter_category(O) unique relate(R) filter_status(A2) filter_category(O2) exist
variant Are there any <A2> <O2>s to the <R> of the <A> <O>?
end
)";
  CHECK_THROWS_WITH_AS(parse_registry_text(wrong_hop),
                       doctest::Contains("hop"), ParseError);

  const char* wrong_terminal = R"(template t1
qtype count
hop 0
program scene filter_status(A) filter_category(O) exist
variant Are there any <A> <O>s?
end
)";
  CHECK_THROWS_AS(parse_registry_text(wrong_terminal), ParseError);
}

TEST_CASE("rendering substitutes, pluralizes, and keeps grammar tight") {
  const Registry registry = default_registry();
  const Taxonomy taxonomy = Taxonomy::defaults();

  const QuestionTemplate* exist = registry.find("exist_relate");
  REQUIRE(exist != nullptr);
  const Binding b = bind({{"A", "stopped"},
                          {"O", "bus"},
                          {"R", "front"},
                          {"A2", "moving"},
                          {"O2", "pedestrian"}});
  CHECK(render(*exist, 0, b, taxonomy) ==
        "Are there any moving pedestrians to the front of the stopped bus?");
  CHECK(render(*exist, 1, b, taxonomy) ==
        "There is a stopped bus; are there any moving pedestrians to the "
        "front of it?");

  // Empty attribute slots collapse without double spaces.
  const QuestionTemplate* count = registry.find("count_basic");
  const Binding empty_attr = bind({{"A", ""}, {"O", "car"}});
  CHECK(render(*count, 0, empty_attr, taxonomy) ==
        "How many cars are there?");

  // Irregular plural.
  const Binding buses = bind({{"A", ""}, {"O", "bus"}});
  CHECK(render(*count, 0, buses, taxonomy) == "How many buses are there?");

  // Relation display names use spaces.
  const Binding fl = bind({{"A", ""},
                           {"O", "car"},
                           {"R", "front_left"},
                           {"A2", ""},
                           {"O2", "pedestrian"}});
  CHECK(render(*exist, 0, fl, taxonomy) ==
        "Are there any pedestrians to the front left of the car?");
}

TEST_CASE("ego determiner rewrites") {
  const Registry registry = default_registry();
  const Taxonomy taxonomy = Taxonomy::defaults();
  const QuestionTemplate* exist = registry.find("exist_relate");

  const Binding me = bind({{"A", ""},
                           {"O", "me"},
                           {"R", "back"},
                           {"A2", "parked"},
                           {"O2", "car"}});
  const std::string q0 = render(*exist, 0, me, taxonomy);
  CHECK(q0 == "Are there any parked cars to the back of me?");
  CHECK(q0.find("the me") == std::string::npos);
  const std::string q1 = render(*exist, 1, me, taxonomy);
  CHECK(q1 == "There is me; are there any parked cars to the back of it?");
  CHECK(q1.find("a me") == std::string::npos);

  // Possessive rewrite.
  const char* custom = R"(template poss
qtype query_status
hop 0
program scene filter_status(A) filter_category(O) unique query_status
variant What is <A> <O>'s status?
end
)";
  const Registry r = parse_registry_text(custom);
  const Binding o_me = bind({{"A", ""}, {"O", "me"}});
  CHECK(render(r.templates[0], 0, o_me, taxonomy) == "What is my status?");
}

TEST_CASE("rendering validates its inputs") {
  const Registry registry = default_registry();
  const QuestionTemplate* exist = registry.find("exist_basic");
  const Binding incomplete = bind({{"A", "moving"}});
  CHECK_THROWS_AS(render(*exist, 0, incomplete, Taxonomy::defaults()), Error);
  const Binding full = bind({{"A", "moving"}, {"O", "car"}});
  CHECK_THROWS_AS(render(*exist, 99, full, Taxonomy::defaults()), Error);
}

TEST_CASE("canonical binding strings are ordered and stable") {
  const Binding b = bind({{"O", "car"}, {"A", "moving"}, {"R", "front"}});
  CHECK(b.canonical() == "A=moving;O=car;R=front");
}

}  // namespace
}  // namespace sceneqa
