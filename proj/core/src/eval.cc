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

#include "sceneqa/eval.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "sceneqa/common.h"

namespace sceneqa {

namespace {
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kQTypeHeaders[kQTypeCount] = {
    "Exist", "Count", "Object", "Status", "Comparison",
};
}  // namespace

std::string canonical_answer(std::string_view answer) {
  std::size_t begin = 0;
  std::size_t end = answer.size();
  while (begin < end &&
         std::isspace(static_cast<unsigned char>(answer[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(answer[end - 1]))) {
    --end;
  }
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    out += static_cast<char>(
        std::tolower(static_cast<unsigned char>(answer[i])));
  }
  // Integer answers canonicalize numerically ("02" -> "2").
  if (!out.empty()) {
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(out.data(), out.data() + out.size(), value);
    if (ec == std::errc() && ptr == out.data() + out.size()) {
      out = std::to_string(value);
    }
  }
  return out;
}

bool answers_match(std::string_view a, std::string_view b) {
  return canonical_answer(a) == canonical_answer(b);
}

std::vector<Prediction> predictions_from_text(std::string_view text) {
  std::vector<Prediction> preds;
  std::set<std::string> seen;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      const json j = json::parse(line);
      Prediction p;
      p.question_id = j.at("question_id").get<std::string>();
      p.answer = j.at("answer").get<std::string>();
      if (!seen.insert(p.question_id).second) {
        throw SchemaError("duplicate prediction id '" + p.question_id + "'");
      }
      preds.push_back(std::move(p));
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError("prediction line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return preds;
}

std::vector<Prediction> load_predictions_file(
    const std::filesystem::path& path) {
  try {
    return predictions_from_text(read_text_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::string predictions_to_text(const std::vector<Prediction>& preds,
                                const Provenance& provenance) {
  std::string out = "# " + provenance.to_json() + "\n";
  for (const Prediction& p : preds) {
    ordered_json j;
    j["question_id"] = p.question_id;
    j["answer"] = p.answer;
    out += j.dump() + "\n";
  }
  return out;
}

MetricsReport evaluate(const std::vector<QAPair>& ground_truth,
                       const std::vector<Prediction>& predictions) {
  std::unordered_map<std::string_view, std::string_view> by_id;
  by_id.reserve(predictions.size());
  for (const Prediction& p : predictions) {
    if (!by_id.emplace(p.question_id, p.answer).second) {
      throw SchemaError("duplicate prediction id '" + p.question_id + "'");
    }
  }

  MetricsReport report;
  std::size_t matched = 0;
  for (const QAPair& gt : ground_truth) {
    if (gt.hop != 0 && gt.hop != 1) {
      throw SchemaError("question '" + gt.question_id +
                        "' has an invalid hop");
    }
    MetricsCell& cell = report.by_hop[static_cast<int>(gt.qtype)][gt.hop];
    ++cell.total;
    ++report.overall.total;

    const auto it = by_id.find(gt.question_id);
    if (it == by_id.end()) {
      ++report.missing_predictions;  // counted wrong, flagged
      continue;
    }
    ++matched;
    if (answers_match(it->second, gt.answer)) {
      ++cell.correct;
      ++report.overall.correct;
    }
  }
  report.extraneous_predictions =
      static_cast<int>(predictions.size() - matched);
  return report;
}

namespace {

std::string fixed1(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", v);
  return buffer;
}

}  // namespace

std::string metrics_to_text(const MetricsReport& report,
                            const Provenance& provenance) {
  std::string out = "# " + provenance.to_json() + "\n";

  auto pad = [](std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  };

  out += pad("", 10);
  for (const auto& header : kQTypeHeaders) {
    out += pad(std::string(header), 24);
  }
  out += "Acc\n";
  out += pad("", 10);
  for (int q = 0; q < kQTypeCount; ++q) {
    out += pad("H0", 8) + pad("H1", 8) + pad("All", 8);
  }
  out += "\n";

  out += pad("accuracy", 10);
  for (int q = 0; q < kQTypeCount; ++q) {
    const QType qtype = static_cast<QType>(q);
    out += pad(fixed1(report.cell(qtype, 0).accuracy()), 8);
    out += pad(fixed1(report.cell(qtype, 1).accuracy()), 8);
    out += pad(fixed1(report.all(qtype).accuracy()), 8);
  }
  out += fixed1(report.overall.accuracy()) + "\n";

  out += pad("count", 10);
  for (int q = 0; q < kQTypeCount; ++q) {
    const QType qtype = static_cast<QType>(q);
    out += pad(std::to_string(report.cell(qtype, 0).total), 8);
    out += pad(std::to_string(report.cell(qtype, 1).total), 8);
    out += pad(std::to_string(report.all(qtype).total), 8);
  }
  out += std::to_string(report.overall.total) + "\n";

  out += "missing: " + std::to_string(report.missing_predictions) +
         "  extraneous: " + std::to_string(report.extraneous_predictions) +
         "\n";
  return out;
}

std::string metrics_to_tsv(const MetricsReport& report,
                           const Provenance& provenance) {
  std::string out = "# " + provenance.to_json() + "\n";
  std::string header;
  std::string accuracy = "accuracy";
  std::string counts = "count";
  header += "row";
  for (int q = 0; q < kQTypeCount; ++q) {
    const QType qtype = static_cast<QType>(q);
    const std::string base{qtype_token(qtype)};
    for (const char* hop : {"h0", "h1", "all"}) {
      header += "\t" + base + "_" + hop;
    }
    accuracy += "\t" + fixed1(report.cell(qtype, 0).accuracy()) + "\t" +
                fixed1(report.cell(qtype, 1).accuracy()) + "\t" +
                fixed1(report.all(qtype).accuracy());
    counts += "\t" + std::to_string(report.cell(qtype, 0).total) + "\t" +
              std::to_string(report.cell(qtype, 1).total) + "\t" +
              std::to_string(report.all(qtype).total);
  }
  header += "\tacc";
  accuracy += "\t" + fixed1(report.overall.accuracy());
  counts += "\t" + std::to_string(report.overall.total);
  return out + header + "\n" + accuracy + "\n" + counts + "\n";
}

BlindBaseline BlindBaseline::fit(const std::vector<QAPair>& train) {
  if (train.empty()) {
    throw Error("cannot fit the blind baseline on an empty training set");
  }
  BlindBaseline baseline;

  std::map<std::string, std::map<std::string, int>> votes;
  std::map<std::string, int> global_votes;
  for (const QAPair& pair : train) {
    const std::string answer = canonical_answer(pair.answer);
    ++votes[pair.template_id][answer];
    ++global_votes[answer];
  }

  // Majority with ties broken toward the lexicographically smallest answer;
  // std::map iteration order makes ">" the correct comparison.
  auto majority = [](const std::map<std::string, int>& hist) {
    std::string best;
    int best_count = -1;
    for (const auto& [answer, count] : hist) {
      if (count > best_count) {
        best = answer;
        best_count = count;
      }
    }
    return best;
  };

  for (const auto& [template_id, hist] : votes) {
    baseline.by_template_[template_id] = majority(hist);
  }
  baseline.global_ = majority(global_votes);
  return baseline;
}

const std::string& BlindBaseline::predict(const QAPair& question) const {
  const auto it = by_template_.find(question.template_id);
  return it == by_template_.end() ? global_ : it->second;
}

std::vector<Prediction> BlindBaseline::predict_all(
    const std::vector<QAPair>& questions) const {
  std::vector<Prediction> preds;
  preds.reserve(questions.size());
  for (const QAPair& q : questions) {
    preds.push_back({q.question_id, predict(q)});
  }
  return preds;
}

}  // namespace sceneqa
