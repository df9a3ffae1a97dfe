#include "cliquescope/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquescope/clique_engine.hpp"
#include "cliquescope/error.hpp"
#include "cliquescope/io.hpp"
#include "cliquescope/learn/cross_validate.hpp"
#include "cliquescope/learn/features.hpp"
#include "cliquescope/metrics.hpp"
#include "cliquescope/temporal.hpp"

namespace cliquescope::cli {
namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string input;
  std::string dataset_dir;
  std::string name;
  int kmax = kDefaultKmax;
  int trajectory_kmax = kDefaultTrajectoryKmax;
  int k = 4;
  bool per_node = false;
  bool extended = false;
  std::size_t steps = kDefaultSteps;
  std::string feature;
  std::string grid;
  std::string penalty = "l2";
  int repeats = 10;
  int folds = 10;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string format;
  std::string output;
  std::string features_out;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CLIQUESCOPE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes to --output when set, else to `out`.
template <typename Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& fn) {
  if (cfg.output.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw IngestionError("cannot write output file: " + cfg.output);
  fn(file);
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) return learn::default_c_grid();
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      double c = std::stod(item, &used);
      if (used != item.size() || !(c > 0.0)) throw std::invalid_argument(item);
      grid.push_back(c);
    } catch (const std::exception&) {
      throw ArgumentError("invalid --grid value '" + item + "'");
    }
  }
  if (grid.empty()) throw ArgumentError("--grid is empty");
  return grid;
}

void cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.kmax < 3) throw ArgumentError("--kmax must be at least 3");
  const LoadedGraph loaded = load_edge_list(std::filesystem::path(cfg.input));
  const Graph& g = loaded.graph;
  const CountOptions options{cfg.threads};
  std::optional<NodeCliqueCounts> node_counts;
  CliqueCountVector counts;
  if (cfg.per_node) {
    node_counts = count_cliques_per_node(g, cfg.kmax, options);
    counts = aggregate(*node_counts);
  } else {
    counts = count_cliques(g, cfg.kmax, options);
  }

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  emit(cfg, out, [&](std::ostream& os) {
    if (format == "csv") {
      if (node_counts) {
        os << "node";
        for (int j = 1; j <= cfg.kmax; ++j) os << ",C" << j;
        os << '\n';
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          os << loaded.original_ids[v];
          for (int j = 1; j <= cfg.kmax; ++j) os << ',' << to_decimal(node_counts->at(v, j));
          os << '\n';
        }
      } else {
        os << "j,count\n";
        for (int j = 1; j <= cfg.kmax; ++j) os << j << ',' << to_decimal(counts[j]) << '\n';
      }
      return;
    }
    json j;
    j["input"] = cfg.input;
    j["seed"] = cfg.seed;
    j["n"] = g.num_nodes();
    j["m"] = g.num_edges();
    j["kmax"] = cfg.kmax;
    json c = json::object();
    for (int k = 1; k <= cfg.kmax; ++k) c[std::to_string(k)] = to_decimal(counts[k]);
    j["counts"] = c;
    if (node_counts) {
      json rows = json::array();
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        json nc = json::object();
        for (int k = 1; k <= cfg.kmax; ++k) nc[std::to_string(k)] = to_decimal(node_counts->at(v, k));
        rows.push_back({{"node", loaded.original_ids[v]}, {"counts", nc}});
      }
      j["per_node"] = rows;
    }
    os << j.dump(2) << '\n';
  });
}

learn::FeatureSpec feature_spec(const RunConfig& cfg) {
  if (!cfg.feature.empty()) return learn::FeatureSpec::parse(cfg.feature);
  return {cfg.extended ? learn::FeatureKind::extended_profile : learn::FeatureKind::clique_profile, cfg.k};
}

void cmd_profile(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k < 3 || cfg.k > learn::kMaxExperimentK)
    throw ArgumentError("--k must lie in [3, " + std::to_string(learn::kMaxExperimentK) + "]");
  const learn::FeatureSpec spec = feature_spec(cfg);
  learn::FeatureMatrix m;
  if (!cfg.dataset_dir.empty()) {
    const DatasetBundle bundle = load_tudataset(cfg.dataset_dir, cfg.name);
    if (spec.k == 3) {
      // The experiment range starts at 4; k = 3 is assembled row by row.
      m.dim = spec.dimension();
      m.labels = bundle.labels;
      m.feature_spec = spec.to_string();
      for (const Graph& g : bundle.graphs) {
        auto row = learn::graph_features(g, spec);
        m.values.insert(m.values.end(), row.begin(), row.end());
      }
    } else {
      m = learn::assemble_features(bundle, spec, {cfg.threads});
    }
  } else {
    if (cfg.input.empty()) throw ArgumentError("profile needs an edge-list input or --dataset-dir/--name");
    const LoadedGraph loaded = load_edge_list(std::filesystem::path(cfg.input));
    m.dim = spec.dimension();
    m.values = learn::graph_features(loaded.graph, spec);
    m.labels = {0};
    m.feature_spec = spec.to_string();
  }
  emit(cfg, out, [&](std::ostream& os) { learn::write_feature_csv(os, m); });
}

void cmd_hocc(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trajectory_kmax < 3) throw ArgumentError("--kmax must be at least 3");
  const TemporalEdgeList stream = load_temporal_edge_list(std::filesystem::path(cfg.input));
  const SnapshotSeries series = build_snapshots(stream, cfg.steps);
  const TrajectoryMatrix m = hocc_trajectories(series, cfg.trajectory_kmax, {cfg.threads});
  emit(cfg, out, [&](std::ostream& os) { write_trajectory_csv(os, m); });
}

void cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const learn::FeatureSpec spec = feature_spec(cfg);
  learn::CVOptions options;
  options.grid = parse_grid(cfg.grid);
  options.repeats = cfg.repeats;
  options.n_folds = cfg.folds;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  if (cfg.penalty == "l1")
    options.svm.penalty = learn::Penalty::l1;
  else if (cfg.penalty != "l2")
    throw ArgumentError("--penalty must be l1 or l2");

  const DatasetBundle bundle = load_tudataset(cfg.dataset_dir, cfg.name);
  const learn::FeatureMatrix features = learn::assemble_features(bundle, spec, {cfg.threads});
  if (!cfg.features_out.empty()) {
    std::ofstream file(cfg.features_out);
    if (!file) throw IngestionError("cannot write feature file: " + cfg.features_out);
    learn::write_feature_csv(file, features);
  }
  learn::CVReport report = learn::cross_validate(features, options);
  report.dataset = cfg.name;
  emit(cfg, out, [&](std::ostream& os) { learn::write_report_json(os, report); });
  err << cfg.name << ' ' << report.feature_spec << " (C=" << fmt_double(report.chosen_C) << "): "
      << learn::summary_line(report) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact clique counts, clique profiles, k-clustering coefficients and graph classification", "cliquescope"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "Worker threads (default: CLIQUESCOPE_THREADS or all cores)");
  app.add_option("--seed", cfg.seed, "Random seed, recorded in every report");

  auto* count = app.add_subcommand("count", "Global (and per-node) k-clique counts of an edge list");
  count->add_option("input", cfg.input, "Edge-list file")->required();
  count->add_option("--kmax", cfg.kmax, "Largest clique order");
  count->add_flag("--per-node", cfg.per_node, "Also report C_j(G;v) for every node");
  count->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--output", cfg.output);

  auto* profile = app.add_subcommand("profile", "Clique-profile feature rows as CSV");
  profile->add_option("input", cfg.input, "Edge-list file");
  profile->add_option("--dataset-dir", cfg.dataset_dir, "Directory in TUDataset layout");
  profile->add_option("--name", cfg.name, "Dataset name");
  profile->add_option("--k", cfg.k, "Profile order");
  profile->add_flag("--extended", cfg.extended, "Append the global clustering coefficient");
  profile->add_option("--format", cfg.format)->check(CLI::IsMember({"csv"}));
  profile->add_option("--output", cfg.output);

  auto* hocc = app.add_subcommand("hocc", "k-clustering-coefficient trajectories of a timestamped edge list");
  hocc->add_option("input", cfg.input, "Temporal edge list (src dst timestamp)")->required();
  hocc->add_option("--kmax", cfg.trajectory_kmax, "Largest order k");
  hocc->add_option("--steps", cfg.steps, "Number of cumulative snapshots");
  hocc->add_option("--format", cfg.format)->check(CLI::IsMember({"csv"}));
  hocc->add_option("--output", cfg.output);

  auto* classify = app.add_subcommand("classify", "Repeated stratified 10-fold CV of a linear SVM");
  classify->add_option("--dataset-dir", cfg.dataset_dir, "Directory in TUDataset layout")->required();
  classify->add_option("--name", cfg.name, "Dataset name")->required();
  classify->add_option("--feature", cfg.feature, "C_k, D_k, acc or cc (overrides --k/--extended)");
  classify->add_option("--k", cfg.k, "Profile order");
  classify->add_flag("--extended", cfg.extended, "Use D_k instead of C_k");
  classify->add_option("--grid", cfg.grid, "Comma-separated C values (default 1e-3..1e3)");
  classify->add_option("--penalty", cfg.penalty)->check(CLI::IsMember({"l1", "l2"}));
  classify->add_option("--repeats", cfg.repeats);
  classify->add_option("--folds", cfg.folds);
  classify->add_option("--features-out", cfg.features_out, "Also write the feature CSV here");
  classify->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  classify->add_option("--output", cfg.output);

  // Subcommand options may also precede or follow global ones.
  for (auto* sub : {count, profile, hocc, classify}) {
    sub->add_option("--threads", cfg.threads);
    sub->add_option("--seed", cfg.seed);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.threads = resolve_threads(cfg.threads);
  try {
    if (count->parsed()) cmd_count(cfg, out);
    if (profile->parsed()) cmd_profile(cfg, out);
    if (hocc->parsed()) cmd_hocc(cfg, out);
    if (classify->parsed()) cmd_classify(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPipeline;
  }
  return kExitOk;
}

}  // namespace cliquescope::cli
