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

#ifndef SCENEQA_EVAL_H_
#define SCENEQA_EVAL_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sceneqa/dataset_io.h"
#include "sceneqa/generator.h"

namespace sceneqa {

struct Prediction {
  std::string question_id;
  std::string answer;
};

// JSONL, one {"question_id", "answer"} per line. Throws SchemaError on
// duplicate ids or an unparseable record.
std::vector<Prediction> load_predictions_file(
    const std::filesystem::path& path);
std::vector<Prediction> predictions_from_text(std::string_view text);
std::string predictions_to_text(const std::vector<Prediction>& preds,
                                const Provenance& provenance);

// Trim + lowercase; integer answers compare numerically ("02" == "2").
std::string canonical_answer(std::string_view answer);
bool answers_match(std::string_view a, std::string_view b);

struct MetricsCell {
  int correct = 0;
  int total = 0;

  // Percentage; 0 for an empty cell.
  double accuracy() const {
    return total == 0 ? 0.0 : 100.0 * correct / total;
  }
};

// Top-1 accuracy broken down by question type and hop. Cell layout mirrors
// the usual results table: five qtypes x {H0, H1, All} plus overall accuracy.
struct MetricsReport {
  std::array<std::array<MetricsCell, 2>, kQTypeCount> by_hop;  // [qtype][hop]
  MetricsCell overall;
  int missing_predictions = 0;  // ground-truth questions with no prediction
  int extraneous_predictions = 0;  // prediction ids absent from ground truth

  const MetricsCell& cell(QType q, int hop) const {
    return by_hop[static_cast<int>(q)][hop];
  }
  MetricsCell all(QType q) const {
    const auto& h = by_hop[static_cast<int>(q)];
    return {h[0].correct + h[1].correct, h[0].total + h[1].total};
  }
};

// Scores predictions against ground truth. Missing predictions count as
// wrong (and are flagged); duplicate prediction ids are an error at load.
// Deterministic and permutation invariant over prediction order.
MetricsReport evaluate(const std::vector<QAPair>& ground_truth,
                       const std::vector<Prediction>& predictions);

std::string metrics_to_text(const MetricsReport& report,
                            const Provenance& provenance);
std::string metrics_to_tsv(const MetricsReport& report,
                           const Provenance& provenance);

// Question-only majority baseline (language-bias probe): per-template
// majority answer with global-majority fallback; ties break to the
// lexicographically smallest canonical answer.
class BlindBaseline {
 public:
  // Throws Error on an empty training set.
  static BlindBaseline fit(const std::vector<QAPair>& train);

  const std::string& predict(const QAPair& question) const;
  std::vector<Prediction> predict_all(
      const std::vector<QAPair>& questions) const;

 private:
  std::map<std::string, std::string> by_template_;
  std::string global_;
};

}  // namespace sceneqa

#endif  // SCENEQA_EVAL_H_
