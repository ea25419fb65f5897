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

// sceneqa: scene-graph construction, template-based QA generation, dataset
// statistics, top-1 evaluation, and the rotated-box BEV pooling demo.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <atomic>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sceneqa/bev.h"
#include "sceneqa/common.h"
#include "sceneqa/dataset_io.h"
#include "sceneqa/eval.h"
#include "sceneqa/generator.h"
#include "sceneqa/scene_graph.h"
#include "sceneqa/scene_io.h"
#include "sceneqa/stats.h"
#include "sceneqa/templates.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;
using namespace sceneqa;

struct RunConfig {
  std::string scenes;
  std::string registry;
  std::string blacklist;
  std::string out;
  int workers = 1;
  GenerationConfig gen;
  BEVConfig bev;
  Taxonomy taxonomy = Taxonomy::defaults();
};

BEVConfig bev_from_json(const json& j) {
  BEVConfig bev;
  if (j.contains("voxel_factor")) bev.voxel_factor = j.at("voxel_factor");
  if (j.contains("out_size_factor")) {
    bev.out_size_factor = j.at("out_size_factor");
  }
  if (j.contains("pc_range")) {
    const json& r = j.at("pc_range");
    if (!r.is_array() || r.size() != 3) {
      throw SchemaError("bev.pc_range must be [[min,max] x 3]");
    }
    for (int axis = 0; axis < 3; ++axis) {
      bev.pc_range[axis] = {r.at(axis).at(0).get<double>(),
                            r.at(axis).at(1).get<double>()};
    }
  }
  bev.validate();
  return bev;
}

RunConfig load_run_config(const std::string& path) {
  RunConfig cfg;
  if (path.empty()) return cfg;
  const json j = json::parse(read_text_file(path));

  if (j.contains("scenes")) cfg.scenes = j.at("scenes");
  if (j.contains("registry")) cfg.registry = j.at("registry");
  if (j.contains("blacklist")) cfg.blacklist = j.at("blacklist");
  if (j.contains("out")) cfg.out = j.at("out");
  if (j.contains("workers")) cfg.workers = j.at("workers");
  if (j.contains("seed")) cfg.gen.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("split_ratio")) cfg.gen.split_ratio = j.at("split_ratio");

  if (j.contains("generation")) {
    const json& g = j.at("generation");
    if (g.contains("max_pairs_per_scene")) {
      cfg.gen.max_pairs_per_scene = g.at("max_pairs_per_scene");
    }
    if (g.contains("per_template_cap")) {
      cfg.gen.per_template_cap = g.at("per_template_cap");
    }
    if (g.contains("empty_attribute_prob")) {
      cfg.gen.empty_attribute_prob = g.at("empty_attribute_prob");
    }
    if (g.contains("count_answer_cap")) {
      cfg.gen.count_answer_cap = g.at("count_answer_cap");
    }
    if (g.contains("balance_cap")) cfg.gen.balance_cap = g.at("balance_cap");
    if (g.contains("balance_cap_by_qtype")) {
      for (const auto& [key, value] :
           g.at("balance_cap_by_qtype").items()) {
        const auto qtype = qtype_from_token(key);
        if (!qtype) {
          throw SchemaError("unknown qtype '" + key +
                            "' in balance_cap_by_qtype");
        }
        cfg.gen.balance_cap_by_qtype[*qtype] = value.get<double>();
      }
    }
    if (g.contains("reject_trivial_degenerate")) {
      cfg.gen.reject_trivial_degenerate = g.at("reject_trivial_degenerate");
    }
  }
  if (j.contains("bev")) cfg.bev = bev_from_json(j.at("bev"));
  if (j.contains("taxonomy")) {
    const json& t = j.at("taxonomy");
    if (t.contains("categories")) {
      cfg.taxonomy.categories =
          t.at("categories").get<std::vector<std::string>>();
    }
    if (t.contains("statuses")) {
      cfg.taxonomy.statuses = t.at("statuses").get<std::vector<std::string>>();
    }
    if (t.contains("plural_exceptions")) {
      cfg.taxonomy.plural_exceptions =
          t.at("plural_exceptions").get<std::map<std::string, std::string>>();
    }
  }
  return cfg;
}

// Hash of the semantic generation inputs. Paths and worker counts stay out:
// they must not change output bytes.
std::string config_hash(const RunConfig& cfg, const std::string& registry_text,
                        const std::string& blacklist_text) {
  ordered_json j;
  j["seed"] = cfg.gen.seed;
  j["max_pairs_per_scene"] = cfg.gen.max_pairs_per_scene;
  j["per_template_cap"] = cfg.gen.per_template_cap;
  j["empty_attribute_prob"] = cfg.gen.empty_attribute_prob;
  j["count_answer_cap"] = cfg.gen.count_answer_cap;
  j["balance_cap"] = cfg.gen.balance_cap;
  ordered_json caps = ordered_json::object();
  for (const auto& [qtype, cap] : cfg.gen.balance_cap_by_qtype) {
    caps[std::string(qtype_token(qtype))] = cap;
  }
  j["balance_cap_by_qtype"] = std::move(caps);
  j["split_ratio"] = cfg.gen.split_ratio;
  j["reject_trivial_degenerate"] = cfg.gen.reject_trivial_degenerate;
  j["categories"] = cfg.taxonomy.categories;
  j["statuses"] = cfg.taxonomy.statuses;
  j["registry"] = to_hex16(fnv1a(registry_text));
  j["blacklist"] = to_hex16(fnv1a(blacklist_text));
  return to_hex16(fnv1a(j.dump()));
}

std::string blacklist_text_of(const RunConfig& cfg) {
  if (cfg.blacklist.empty()) return "";
  return read_text_file(cfg.blacklist);
}

std::string registry_text_of(const RunConfig& cfg) {
  if (cfg.registry.empty()) return default_registry_text();
  return read_text_file(cfg.registry);
}

int cmd_build_graphs(const RunConfig& cfg) {
  if (cfg.scenes.empty() || cfg.out.empty()) {
    throw Error("build-graphs requires --scenes and --out");
  }
  fs::create_directories(cfg.out);
  Provenance provenance;
  provenance.seed = cfg.gen.seed;
  provenance.config_hash = config_hash(cfg, registry_text_of(cfg), "");

  const std::vector<fs::path> files = list_scene_files(cfg.scenes);

  // Load and build in parallel; write serially in file order so reruns are
  // byte-identical and duplicate scene ids are caught.
  struct FileResult {
    std::vector<std::pair<std::string, std::string>> graphs;  // id, text
    std::string error;
  };
  std::vector<FileResult> results(files.size());
  {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= files.size()) return;
        try {
          for (const Scene& scene :
               load_scenes_file(files[i], cfg.taxonomy)) {
            results[i].graphs.emplace_back(
                scene.scene_id,
                scene_graph_to_text(build_scene_graph(scene), provenance));
          }
        } catch (const Error& e) {
          results[i] = {{}, e.what()};
        }
      }
    };
    const int threads = std::max(
        1, std::min<int>(cfg.workers, static_cast<int>(files.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  int failures = 0;
  std::set<std::string> written;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!results[i].error.empty()) {
      std::cerr << "error: " << results[i].error << "\n";
      ++failures;
      continue;
    }
    for (const auto& [scene_id, text] : results[i].graphs) {
      if (!written.insert(scene_id).second) {
        std::cerr << "error: " << files[i].string()
                  << ": duplicate scene_id '" << scene_id << "'\n";
        ++failures;
        continue;
      }
      write_text_file(fs::path(cfg.out) / (scene_id + ".graph.json"), text);
    }
  }
  if (failures > 0) {
    std::cerr << failures << " scene file(s) failed\n";
    return 2;
  }
  return 0;
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.scenes.empty() || cfg.out.empty()) {
    throw Error("generate requires --scenes and --out");
  }
  const std::string registry_text = registry_text_of(cfg);
  const std::string blacklist_text = blacklist_text_of(cfg);
  const Registry registry = parse_registry_text(registry_text);

  RunConfig effective = cfg;
  effective.gen.blacklist = blacklist_from_text(blacklist_text);

  const std::vector<Scene> scenes =
      load_scenes_dir(cfg.scenes, cfg.taxonomy);
  if (scenes.empty()) {
    throw SchemaError("no scenes found in " + cfg.scenes);
  }

  const Dataset dataset = generate_dataset(scenes, registry, cfg.taxonomy,
                                           effective.gen, cfg.workers);

  Provenance provenance;
  provenance.seed = cfg.gen.seed;
  provenance.config_hash = config_hash(cfg, registry_text, blacklist_text);

  fs::create_directories(cfg.out);
  save_dataset_file(dataset.train, provenance,
                    fs::path(cfg.out) / "train.jsonl");
  save_dataset_file(dataset.test, provenance,
                    fs::path(cfg.out) / "test.jsonl");
  write_text_file(fs::path(cfg.out) / "report.json",
                  report_to_text(dataset.report, provenance));

  std::cout << "scenes " << dataset.report.scene_count << ", emitted "
            << dataset.report.emitted << ", balanced "
            << dataset.report.after_balance << " (train "
            << dataset.report.train_count << ", test "
            << dataset.report.test_count << ")\n";
  return 0;
}

int cmd_stats(const RunConfig& cfg, const std::string& dataset_path, int k) {
  const std::vector<QAPair> dataset = load_dataset_file(dataset_path);
  const StatsReport report = compute_stats(dataset, k);

  Provenance provenance;
  provenance.seed = cfg.gen.seed;
  provenance.config_hash = config_hash(cfg, registry_text_of(cfg), "");

  if (cfg.out.empty()) {
    std::cout << stats_to_text(report, provenance);
    return 0;
  }
  fs::create_directories(cfg.out);
  write_text_file(fs::path(cfg.out) / "stats.json",
                  stats_to_text(report, provenance));
  write_text_file(fs::path(cfg.out) / "lengths.tsv",
                  stats_lengths_tsv(report, provenance));
  write_text_file(fs::path(cfg.out) / "answers.tsv",
                  stats_answers_tsv(report, provenance));
  write_text_file(fs::path(cfg.out) / "qtypes.tsv",
                  stats_qtypes_tsv(report, provenance));
  write_text_file(fs::path(cfg.out) / "first_words.tsv",
                  stats_prefixes_tsv(report, provenance));
  return 0;
}

int cmd_evaluate(const RunConfig& cfg, const std::string& gt_path,
                 const std::string& preds_path,
                 const std::string& blind_from_path,
                 const std::string& save_preds_path) {
  const std::vector<QAPair> ground_truth = load_dataset_file(gt_path);

  Provenance provenance;
  provenance.seed = cfg.gen.seed;
  provenance.config_hash = config_hash(cfg, registry_text_of(cfg), "");

  std::vector<Prediction> predictions;
  if (!blind_from_path.empty()) {
    const std::vector<QAPair> train = load_dataset_file(blind_from_path);
    const BlindBaseline baseline = BlindBaseline::fit(train);
    predictions = baseline.predict_all(ground_truth);
    if (!save_preds_path.empty()) {
      write_text_file(save_preds_path,
                      predictions_to_text(predictions, provenance));
    }
  } else if (!preds_path.empty()) {
    predictions = load_predictions_file(preds_path);
  } else {
    throw Error("evaluate requires --preds or --blind-from");
  }

  const MetricsReport report = evaluate(ground_truth, predictions);
  std::cout << metrics_to_text(report, provenance);
  if (!cfg.out.empty()) {
    fs::create_directories(cfg.out);
    write_text_file(fs::path(cfg.out) / "metrics.txt",
                    metrics_to_text(report, provenance));
    write_text_file(fs::path(cfg.out) / "metrics.tsv",
                    metrics_to_tsv(report, provenance));
  }
  return 0;
}

int cmd_pool_demo(const RunConfig& cfg, const std::string& grid_path,
                  const std::string& boxes_path, const std::string& strategy,
                  const std::string& crop) {
  if (cfg.out.empty()) throw Error("pool-demo requires --out");
  const BEVGrid grid = load_grid(grid_path);

  const json doc = json::parse(read_text_file(boxes_path));
  BEVConfig bev = cfg.bev;
  if (doc.contains("config")) bev = bev_from_json(doc.at("config"));
  if (!doc.contains("boxes") || !doc.at("boxes").is_array()) {
    throw SchemaError(boxes_path + ": missing 'boxes' array");
  }

  const PoolStrategy pool =
      strategy == "max" ? PoolStrategy::max : PoolStrategy::mean;
  const bool circumscribed = crop == "circumscribed";

  Provenance provenance;
  provenance.seed = cfg.gen.seed;
  provenance.config_hash = config_hash(cfg, registry_text_of(cfg), "");

  ordered_json out;
  out["_provenance"] = json::parse(provenance.to_json());
  out["strategy"] = strategy;
  out["crop"] = crop;
  out["embeddings"] = ordered_json::array();

  int index = 0;
  for (const json& b : doc.at("boxes")) {
    if (!b.is_array() || b.size() != 7) {
      throw SchemaError(boxes_path + ": box " + std::to_string(index) +
                        " must be [x,y,z,xs,ys,zs,yaw]");
    }
    Box3D box;
    box.x = b.at(0);
    box.y = b.at(1);
    box.z = b.at(2);
    box.x_size = b.at(3);
    box.y_size = b.at(4);
    box.z_size = b.at(5);
    box.yaw = normalize_radians(b.at(6).get<double>());

    RotatedRect rect = project_box_to_bev(box, bev);
    if (circumscribed) rect = circumscribed_rect(rect);
    const auto embedding = crop_pool(grid, rect, pool);
    if (!embedding) {
      throw SchemaError("box " + std::to_string(index) +
                        " covers no grid cell centers (empty region)");
    }
    out["embeddings"].push_back(*embedding);
    ++index;
  }
  fs::create_directories(cfg.out);
  write_text_file(fs::path(cfg.out) / "embeddings.json", out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scene-graph QA dataset engine"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "Run configuration JSON")
      ->envname("SCENEQA_CONFIG");

  // Shared flag storage; flags win over the config file.
  std::optional<std::string> scenes, registry, blacklist, out;
  std::optional<std::uint64_t> seed;
  std::optional<double> split;
  std::optional<int> workers;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenes", scenes, "Scene annotation directory")
        ->envname("SCENEQA_SCENES");
    cmd->add_option("--registry", registry,
                    "Template registry file (default: built-in registry)")
        ->envname("SCENEQA_REGISTRY");
    cmd->add_option("--blacklist", blacklist,
                    "status,category blacklist file")
        ->envname("SCENEQA_BLACKLIST");
    cmd->add_option("--out", out, "Output directory")->envname("SCENEQA_OUT");
    cmd->add_option("--seed", seed, "Generation seed")
        ->envname("SCENEQA_SEED");
    cmd->add_option("--split", split, "Train split ratio")
        ->envname("SCENEQA_SPLIT");
    cmd->add_option("--workers", workers, "Worker thread count")
        ->envname("SCENEQA_WORKERS");
  };

  CLI::App* build_graphs =
      app.add_subcommand("build-graphs", "Serialize scene graphs");
  add_common(build_graphs);

  CLI::App* generate =
      app.add_subcommand("generate", "Generate the QA dataset");
  add_common(generate);

  CLI::App* stats = app.add_subcommand("stats", "Dataset statistics");
  add_common(stats);
  std::string dataset_path;
  int k = 4;
  stats->add_option("--dataset", dataset_path, "Dataset JSONL file")
      ->required();
  stats->add_option("--k", k, "First-words prefix depth");

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Score predictions (top-1 accuracy)");
  add_common(evaluate_cmd);
  std::string gt_path, preds_path, blind_from, save_preds;
  evaluate_cmd->add_option("--gt", gt_path, "Ground-truth dataset JSONL")
      ->required();
  evaluate_cmd->add_option("--preds", preds_path, "Predictions JSONL");
  evaluate_cmd->add_option("--blind-from", blind_from,
                           "Fit the question-only baseline on this train set");
  evaluate_cmd->add_option("--save-preds", save_preds,
                           "Write baseline predictions here");

  CLI::App* pool_demo =
      app.add_subcommand("pool-demo", "Rotated-box feature crop and pooling");
  add_common(pool_demo);
  std::string grid_path, boxes_path;
  std::string strategy = "mean", crop = "rotated";
  pool_demo->add_option("--grid", grid_path, "BEV grid file")->required();
  pool_demo->add_option("--boxes", boxes_path, "Boxes JSON file")->required();
  pool_demo->add_option("--strategy", strategy, "Pooling strategy")
      ->check(CLI::IsMember({"mean", "max"}))
      ->envname("SCENEQA_STRATEGY");
  pool_demo->add_option("--crop", crop, "Crop variant")
      ->check(CLI::IsMember({"rotated", "circumscribed"}))
      ->envname("SCENEQA_CROP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg = load_run_config(config_path);
    if (scenes) cfg.scenes = *scenes;
    if (registry) cfg.registry = *registry;
    if (blacklist) cfg.blacklist = *blacklist;
    if (out) cfg.out = *out;
    if (seed) cfg.gen.seed = *seed;
    if (split) cfg.gen.split_ratio = *split;
    if (workers) cfg.workers = *workers;

    if (build_graphs->parsed()) return cmd_build_graphs(cfg);
    if (generate->parsed()) return cmd_generate(cfg);
    if (stats->parsed()) return cmd_stats(cfg, dataset_path, k);
    if (evaluate_cmd->parsed()) {
      return cmd_evaluate(cfg, gt_path, preds_path, blind_from, save_preds);
    }
    if (pool_demo->parsed()) {
      return cmd_pool_demo(cfg, grid_path, boxes_path, strategy, crop);
    }
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
