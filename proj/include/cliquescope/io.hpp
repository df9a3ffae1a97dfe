#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cliquescope/graph.hpp"

namespace cliquescope {

struct EdgeListOptions {
  // When false only reciprocated pairs (u v and v u both listed) become edges.
  bool symmetrize = true;
  // When false a self-loop is reported as a parse error.
  bool drop_self_loops = true;
};

struct LoadedGraph {
  Graph graph;
  // original_ids[v] is the id that node v carried in the input.
  std::vector<std::int64_t> original_ids;
};

// Whitespace-separated integer pairs, one per line; extra tokens are ignored,
// blank lines and lines starting with '#' are skipped. Node ids are compacted
// to 0..n-1 in first-seen order.
LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options = {});
LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});

struct DatasetBundle {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> labels;
  // class_values[c] is the original label of class id c (ascending).
  std::vector<std::int64_t> class_values;

  std::size_t num_classes() const noexcept { return class_values.size(); }
  std::vector<std::size_t> class_sizes() const;
};

// Reads the TUDataset text layout: <name>_A.txt, <name>_graph_indicator.txt
// and <name>_graph_labels.txt inside `directory`.
DatasetBundle load_tudataset(const std::filesystem::path& directory, const std::string& name);

struct TemporalEdge {
  std::int64_t source;
  std::int64_t target;
  std::int64_t timestamp;
};

struct TemporalEdgeList {
  std::vector<TemporalEdge> records;
};

// `src dst timestamp` per line, records kept in input order and unsimplified.
TemporalEdgeList load_temporal_edge_list(std::istream& in);
TemporalEdgeList load_temporal_edge_list(const std::filesystem::path& path);

}  // namespace cliquescope
