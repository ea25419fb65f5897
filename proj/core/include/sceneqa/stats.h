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

#ifndef SCENEQA_STATS_H_
#define SCENEQA_STATS_H_

#include <map>
#include <string>
#include <vector>

#include "sceneqa/dataset_io.h"
#include "sceneqa/generator.h"

namespace sceneqa {

// Counting trie over question word prefixes; each node stores how many
// questions pass through it.
struct PrefixTrie {
  int count = 0;
  std::map<std::string, PrefixTrie> children;
};

struct StatsReport {
  int total = 0;
  int prefix_depth = 4;
  std::map<int, int> length_hist;  // word count -> frequency
  std::map<QType, std::map<std::string, int>> answer_hist;
  std::map<QType, int> qtype_hist;
  PrefixTrie first_words;
};

// Lowercases, strips "?.,;" and splits on whitespace.
std::vector<std::string> tokenize_question(std::string_view question);

// Descriptive statistics: length histogram, per-qtype answer histogram,
// qtype histogram, first-k-words trie. Permutation invariant over input
// order. Throws Error on an empty dataset or k < 1.
StatsReport compute_stats(const std::vector<QAPair>& dataset, int k = 4);

std::string stats_to_text(const StatsReport& report,
                          const Provenance& provenance);
// Delimiter-separated tables for plotting: lengths, answers, qtypes,
// first-word prefixes.
std::string stats_lengths_tsv(const StatsReport& report,
                              const Provenance& provenance);
std::string stats_answers_tsv(const StatsReport& report,
                              const Provenance& provenance);
std::string stats_qtypes_tsv(const StatsReport& report,
                             const Provenance& provenance);
std::string stats_prefixes_tsv(const StatsReport& report,
                               const Provenance& provenance);

}  // namespace sceneqa

#endif  // SCENEQA_STATS_H_
