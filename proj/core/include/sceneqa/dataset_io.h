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

#ifndef SCENEQA_DATASET_IO_H_
#define SCENEQA_DATASET_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sceneqa/common.h"
#include "sceneqa/generator.h"
#include "sceneqa/scene_graph.h"

namespace sceneqa {

// Output provenance, stamped into every artifact this tool writes. Line
// oriented files carry it as a leading "# {...}" comment; JSON documents as a
// "_provenance" member. The config hash covers semantic inputs only (never
// paths or worker counts), so reruns compare byte-identical.
struct Provenance {
  std::string tool_version{kToolVersion};
  std::uint64_t seed = 0;
  std::string config_hash;

  std::string to_json() const;
};

// Dataset records, one JSON object per line with exactly the fields
// {question_id, scene_id, question, answer, template_id, hop, qtype}.
std::string dataset_to_text(const std::vector<QAPair>& pairs,
                            const Provenance& provenance);
void save_dataset_file(const std::vector<QAPair>& pairs,
                       const Provenance& provenance,
                       const std::filesystem::path& path);
// Round-trips everything dataset_to_text writes. The binding and variant
// index are generation-internal and not recoverable from a dataset file.
std::vector<QAPair> load_dataset_file(const std::filesystem::path& path);
std::vector<QAPair> dataset_from_text(std::string_view text);

// Blacklist file: one "status,category" pair per line, '#' comments allowed.
std::set<std::pair<std::string, std::string>> load_blacklist_file(
    const std::filesystem::path& path);
std::set<std::pair<std::string, std::string>> blacklist_from_text(
    std::string_view text);

std::string report_to_text(const GenerationReport& report,
                           const Provenance& provenance);

std::string scene_graph_to_text(const SceneGraph& graph,
                                const Provenance& provenance);

void write_text_file(const std::filesystem::path& path,
                     std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace sceneqa

#endif  // SCENEQA_DATASET_IO_H_
