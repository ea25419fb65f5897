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

#include <cctype>

#include "json.hpp"
#include "sceneqa/common.h"

namespace sceneqa {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::vector<std::string> tokenize_question(std::string_view question) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : question) {
    if (c == '?' || c == '.' || c == ',' || c == ';') continue;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

StatsReport compute_stats(const std::vector<QAPair>& dataset, int k) {
  if (dataset.empty()) throw Error("cannot compute stats of an empty dataset");
  if (k < 1) throw Error("prefix depth k must be >= 1");

  StatsReport report;
  report.total = static_cast<int>(dataset.size());
  report.prefix_depth = k;

  for (const QAPair& pair : dataset) {
    const std::vector<std::string> tokens = tokenize_question(pair.question);
    ++report.length_hist[static_cast<int>(tokens.size())];
    ++report.answer_hist[pair.qtype][pair.answer];
    ++report.qtype_hist[pair.qtype];

    PrefixTrie* node = &report.first_words;
    ++node->count;
    for (int depth = 0; depth < k && depth < static_cast<int>(tokens.size());
         ++depth) {
      node = &node->children[tokens[depth]];
      ++node->count;
    }
  }
  return report;
}

namespace {

ordered_json trie_to_json(const PrefixTrie& node) {
  ordered_json j;
  j["count"] = node.count;
  if (!node.children.empty()) {
    ordered_json children = ordered_json::object();
    for (const auto& [word, child] : node.children) {
      children[word] = trie_to_json(child);
    }
    j["children"] = std::move(children);
  }
  return j;
}

void trie_rows(const PrefixTrie& node, const std::string& prefix, int depth,
               std::string& out) {
  for (const auto& [word, child] : node.children) {
    const std::string path = prefix.empty() ? word : prefix + " " + word;
    out += std::to_string(depth) + "\t" + path + "\t" +
           std::to_string(child.count) + "\n";
    trie_rows(child, path, depth + 1, out);
  }
}

std::string header_line(const Provenance& provenance) {
  return "# " + provenance.to_json() + "\n";
}

}  // namespace

std::string stats_to_text(const StatsReport& report,
                          const Provenance& provenance) {
  ordered_json j;
  j["_provenance"] = nlohmann::json::parse(provenance.to_json());
  j["total"] = report.total;
  j["prefix_depth"] = report.prefix_depth;

  ordered_json lengths = ordered_json::object();
  for (const auto& [len, freq] : report.length_hist) {
    lengths[std::to_string(len)] = freq;
  }
  j["question_length"] = std::move(lengths);

  ordered_json qtypes = ordered_json::object();
  for (const auto& [qtype, freq] : report.qtype_hist) {
    qtypes[std::string(qtype_token(qtype))] = freq;
  }
  j["question_types"] = std::move(qtypes);

  ordered_json answers = ordered_json::object();
  for (const auto& [qtype, hist] : report.answer_hist) {
    ordered_json h = ordered_json::object();
    for (const auto& [answer, freq] : hist) h[answer] = freq;
    answers[std::string(qtype_token(qtype))] = std::move(h);
  }
  j["answers"] = std::move(answers);

  j["first_words"] = trie_to_json(report.first_words);
  return j.dump(2) + "\n";
}

std::string stats_lengths_tsv(const StatsReport& report,
                              const Provenance& provenance) {
  std::string out = header_line(provenance) + "length\tcount\n";
  for (const auto& [len, freq] : report.length_hist) {
    out += std::to_string(len) + "\t" + std::to_string(freq) + "\n";
  }
  return out;
}

std::string stats_answers_tsv(const StatsReport& report,
                              const Provenance& provenance) {
  std::string out = header_line(provenance) + "qtype\tanswer\tcount\n";
  for (const auto& [qtype, hist] : report.answer_hist) {
    for (const auto& [answer, freq] : hist) {
      out += std::string(qtype_token(qtype)) + "\t" + answer + "\t" +
             std::to_string(freq) + "\n";
    }
  }
  return out;
}

std::string stats_qtypes_tsv(const StatsReport& report,
                             const Provenance& provenance) {
  std::string out = header_line(provenance) + "qtype\tcount\n";
  for (const auto& [qtype, freq] : report.qtype_hist) {
    out += std::string(qtype_token(qtype)) + "\t" + std::to_string(freq) +
           "\n";
  }
  return out;
}

std::string stats_prefixes_tsv(const StatsReport& report,
                               const Provenance& provenance) {
  std::string out = header_line(provenance) + "depth\tprefix\tcount\n";
  trie_rows(report.first_words, "", 1, out);
  return out;
}

}  // namespace sceneqa
