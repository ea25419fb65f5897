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

#include "sceneqa/dataset_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sceneqa/common.h"

namespace sceneqa {

namespace {
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;
}  // namespace

std::string Provenance::to_json() const {
  ordered_json j;
  j["tool_version"] = tool_version;
  j["seed"] = seed;
  j["config_hash"] = config_hash;
  return j.dump();
}

std::string dataset_to_text(const std::vector<QAPair>& pairs,
                            const Provenance& provenance) {
  std::string out = "# " + provenance.to_json() + "\n";
  for (const QAPair& pair : pairs) {
    ordered_json j;
    j["question_id"] = pair.question_id;
    j["scene_id"] = pair.scene_id;
    j["question"] = pair.question;
    j["answer"] = pair.answer;
    j["template_id"] = pair.template_id;
    j["hop"] = pair.hop;
    j["qtype"] = qtype_token(pair.qtype);
    out += j.dump() + "\n";
  }
  return out;
}

void save_dataset_file(const std::vector<QAPair>& pairs,
                       const Provenance& provenance,
                       const std::filesystem::path& path) {
  write_text_file(path, dataset_to_text(pairs, provenance));
}

std::vector<QAPair> dataset_from_text(std::string_view text) {
  std::vector<QAPair> pairs;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      const json j = json::parse(line);
      QAPair pair;
      pair.question_id = j.at("question_id").get<std::string>();
      pair.scene_id = j.at("scene_id").get<std::string>();
      pair.question = j.at("question").get<std::string>();
      pair.answer = j.at("answer").get<std::string>();
      pair.template_id = j.at("template_id").get<std::string>();
      pair.hop = j.at("hop").get<int>();
      const auto qtype = qtype_from_token(j.at("qtype").get<std::string>());
      if (!qtype) throw ParseError("unknown qtype");
      pair.qtype = *qtype;
      pairs.push_back(std::move(pair));
    } catch (const std::exception& e) {
      throw ParseError("dataset line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  return pairs;
}

std::vector<QAPair> load_dataset_file(const std::filesystem::path& path) {
  try {
    return dataset_from_text(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::set<std::pair<std::string, std::string>> blacklist_from_text(
    std::string_view text) {
  std::set<std::pair<std::string, std::string>> blacklist;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t");
    const auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return std::string();
    return s.substr(begin, end - begin + 1);
  };
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto comma = trimmed.find(',');
    if (comma == std::string::npos) {
      throw ParseError("blacklist line " + std::to_string(line_no) +
                       ": expected 'status,category'");
    }
    const std::string status = trim(trimmed.substr(0, comma));
    const std::string category = trim(trimmed.substr(comma + 1));
    if (status.empty() || category.empty()) {
      throw ParseError("blacklist line " + std::to_string(line_no) +
                       ": empty status or category");
    }
    blacklist.insert({status, category});
  }
  return blacklist;
}

std::set<std::pair<std::string, std::string>> load_blacklist_file(
    const std::filesystem::path& path) {
  try {
    return blacklist_from_text(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string report_to_text(const GenerationReport& report,
                           const Provenance& provenance) {
  ordered_json j;
  j["_provenance"] = json::parse(provenance.to_json());
  j["scenes"] = report.scene_count;
  j["pairs_emitted"] = report.emitted;
  j["pairs_after_balance"] = report.after_balance;
  j["train_count"] = report.train_count;
  j["test_count"] = report.test_count;

  ordered_json rejections = ordered_json::object();
  for (const auto& [reason, count] : report.rejections) {
    rejections[std::string(rejection_token(reason))] = count;
  }
  j["rejections"] = std::move(rejections);

  ordered_json per_template = ordered_json::object();
  for (const auto& [id, yield] : report.per_template) {
    ordered_json t;
    t["emitted"] = yield.emitted;
    ordered_json r = ordered_json::object();
    for (const auto& [reason, count] : yield.rejections) {
      r[std::string(rejection_token(reason))] = count;
    }
    t["rejections"] = std::move(r);
    per_template[id] = std::move(t);
  }
  j["per_template"] = std::move(per_template);
  return j.dump(2) + "\n";
}

std::string scene_graph_to_text(const SceneGraph& graph,
                                const Provenance& provenance) {
  ordered_json j;
  j["_provenance"] = json::parse(provenance.to_json());
  j["scene_id"] = graph.scene_id;
  j["nodes"] = ordered_json::array();
  for (int node = 0; node < graph.node_count(); ++node) {
    ordered_json n;
    n["id"] = graph.node_id(node);
    n["category"] = graph.node_category(node);
    if (!graph.node_status(node).empty()) {
      n["status"] = graph.node_status(node);
    }
    if (!graph.is_ego(node)) {
      const Box3D& box = graph.objects[node - 1].box;
      n["box"] = {box.x,      box.y,      box.z, box.x_size,
                  box.y_size, box.z_size, box.yaw};
    }
    j["nodes"].push_back(std::move(n));
  }
  j["edges"] = ordered_json::array();
  for (int ref = 0; ref < graph.node_count(); ++ref) {
    for (int target = 0; target < graph.node_count(); ++target) {
      if (ref == target) continue;
      ordered_json e;
      e["ref"] = graph.node_id(ref);
      e["target"] = graph.node_id(target);
      e["relation"] = relation_token(graph.relation(ref, target));
      j["edges"].push_back(std::move(e));
    }
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace sceneqa
