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

#include "sceneqa/stats.h"

#include <algorithm>

#include "doctest.h"
#include "sceneqa/common.h"
#include "support/synthetic.h"

namespace sceneqa {
namespace {

QAPair q(const std::string& question, const std::string& answer = "yes",
         QType qtype = QType::exist) {
  QAPair p;
  p.question = question;
  p.answer = answer;
  p.qtype = qtype;
  return p;
}

TEST_CASE("tokenization lowercases and strips punctuation") {
  const auto tokens = tokenize_question("Are there any cars?");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0] == "are");
  CHECK(tokens[3] == "cars");
  CHECK(tokenize_question("There is a bus; what is it?").size() == 7);
}

TEST_CASE("length histogram counts words") {
  const StatsReport report = compute_stats({q("Are there any cars?")}, 4);
  REQUIRE(report.length_hist.size() == 1);
  CHECK(report.length_hist.at(4) == 1);
  CHECK(report.total == 1);
}

TEST_CASE("shared prefixes accumulate in the trie") {
  const StatsReport report = compute_stats(
      {q("How many moving cars are there?"),
       q("How many moving cars are to the front of me?")},
      4);
  const PrefixTrie* node = &report.first_words;
  for (const char* word : {"how", "many", "moving", "cars"}) {
    REQUIRE(node->children.count(word) == 1);
    node = &node->children.at(word);
  }
  CHECK(node->count == 2);  // the depth-4 node holds both questions
}

TEST_CASE("histogram totals equal the dataset size") {
  const std::vector<QAPair> dataset = {
      q("Are there any cars?", "yes", QType::exist),
      q("How many cars are there?", "3", QType::count),
      q("What is the moving thing?", "car", QType::query_object),
      q("Are there any buses?", "no", QType::exist),
  };
  const StatsReport report = compute_stats(dataset, 4);
  int length_total = 0;
  for (const auto& [len, freq] : report.length_hist) length_total += freq;
  CHECK(length_total == 4);
  int qtype_total = 0;
  for (const auto& [qt, freq] : report.qtype_hist) qtype_total += freq;
  CHECK(qtype_total == 4);
  int answer_total = 0;
  for (const auto& [qt, hist] : report.answer_hist) {
    for (const auto& [answer, freq] : hist) answer_total += freq;
  }
  CHECK(answer_total == 4);
}

TEST_CASE("stats are permutation invariant") {
  std::vector<QAPair> dataset = {
      q("Are there any cars?", "yes", QType::exist),
      q("How many cars are there?", "3", QType::count),
      q("What is the moving thing?", "car", QType::query_object),
  };
  const Provenance provenance{"0.1.0", 0, "x"};
  const std::string before =
      stats_to_text(compute_stats(dataset, 4), provenance);
  std::reverse(dataset.begin(), dataset.end());
  const std::string after =
      stats_to_text(compute_stats(dataset, 4), provenance);
  CHECK(before == after);
}

TEST_CASE("empty input and bad depth are explicit errors") {
  CHECK_THROWS_AS(compute_stats({}, 4), Error);
  CHECK_THROWS_AS(compute_stats({q("Hi there?")}, 0), Error);
}

TEST_CASE("generated corpora stay in the expected length band") {
  // With attribute slots always bound, the shortest shipped surface form is
  // five words.
  const std::vector<Scene> scenes = testing::make_scenes(808, 12, 5, 20);
  GenerationConfig config = testing::test_config(7);
  config.empty_attribute_prob = 0.0;
  const Dataset dataset = generate_dataset(scenes, default_registry(),
                                           Taxonomy::defaults(), config, 1);
  std::vector<QAPair> all = dataset.train;
  all.insert(all.end(), dataset.test.begin(), dataset.test.end());
  REQUIRE(!all.empty());

  const StatsReport report = compute_stats(all, 4);
  CHECK(report.length_hist.begin()->first >= 5);
  CHECK(report.length_hist.rbegin()->first <= 45);
}

}  // namespace
}  // namespace sceneqa
