#include "cliquescope/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string_view>
#include <unordered_map>

#include "cliquescope/error.hpp"

namespace cliquescope {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

// Splits on whitespace and, when `commas` is set, on commas too.
std::vector<std::string_view> tokenize(std::string_view line, bool commas) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto sep = [&](char c) { return is_space(c) || (commas && c == ','); };
  while (i < line.size()) {
    while (i < line.size() && sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
  return value;
}

// Calls fn(line_number, line) for every line of `in`.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) fn(++line_no, std::string_view(line));
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open file: " + path.string());
  return in;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options) {
  LoadedGraph result;
  std::unordered_map<std::int64_t, NodeId> index;
  auto compact = [&](std::int64_t id) {
    auto [it, inserted] = index.try_emplace(id, static_cast<NodeId>(result.original_ids.size()));
    if (inserted) result.original_ids.push_back(id);
    return it->second;
  };

  std::vector<Edge> edges;
  for_each_line(in, [&](std::size_t line_no, std::string_view line) {
    if (skippable(line)) return;
    auto tokens = tokenize(line, false);
    if (tokens.size() < 2) throw ParseError(line_no, "expected two node ids");
    std::int64_t a = parse_int(tokens[0], line_no, "node id");
    std::int64_t b = parse_int(tokens[1], line_no, "node id");
    if (a < 0 || b < 0) throw ParseError(line_no, "node ids must be non-negative");
    if (a == b && !options.drop_self_loops) throw ParseError(line_no, "self-loop on node " + std::to_string(a));
    NodeId u = compact(a);
    NodeId v = compact(b);
    if (u != v) edges.emplace_back(u, v);
  });

  if (!options.symmetrize) {
    std::vector<Edge> arcs = edges;
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    std::vector<Edge> mutual;
    for (auto [u, v] : arcs)
      if (u < v && std::binary_search(arcs.begin(), arcs.end(), Edge{v, u})) mutual.emplace_back(u, v);
    edges = std::move(mutual);
  }

  result.graph = Graph::from_edges(result.original_ids.size(), edges);
  return result;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  auto in = open_or_throw(path);
  return load_edge_list(in, options);
}

std::vector<std::size_t> DatasetBundle::class_sizes() const {
  std::vector<std::size_t> sizes(num_classes(), 0);
  for (int c : labels) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

DatasetBundle load_tudataset(const std::filesystem::path& directory, const std::string& name) {
  const auto edges_path = directory / (name + "_A.txt");
  const auto indicator_path = directory / (name + "_graph_indicator.txt");
  const auto labels_path = directory / (name + "_graph_labels.txt");
  for (const auto& p : {edges_path, indicator_path, labels_path})
    if (!std::filesystem::exists(p)) throw IngestionError("missing dataset file: " + p.string());

  // Node i (1-indexed) belongs to graph graph_of[i-1] (1-indexed).
  std::vector<std::int64_t> graph_of;
  {
    auto in = open_or_throw(indicator_path);
    for_each_line(in, [&](std::size_t line_no, std::string_view line) {
      if (trim(line).empty()) return;
      std::int64_t gid = parse_int(trim(line), line_no, "graph id");
      if (gid < 1) throw FormatError(indicator_path.string() + ": line " + std::to_string(line_no) + ": graph ids are 1-indexed");
      graph_of.push_back(gid);
    });
  }

  std::vector<std::int64_t> raw_labels;
  {
    auto in = open_or_throw(labels_path);
    for_each_line(in, [&](std::size_t line_no, std::string_view line) {
      if (trim(line).empty()) return;
      raw_labels.push_back(parse_int(trim(line), line_no, "graph label"));
    });
  }

  const std::size_t num_graphs = graph_of.empty() ? 0 : static_cast<std::size_t>(*std::max_element(graph_of.begin(), graph_of.end()));
  if (raw_labels.size() != num_graphs)
    throw FormatError(labels_path.string() + ": expected " + std::to_string(num_graphs) + " labels, found " + std::to_string(raw_labels.size()));

  // Local ids follow file order within each graph.
  std::vector<NodeId> local_id(graph_of.size());
  std::vector<std::size_t> graph_size(num_graphs, 0);
  for (std::size_t i = 0; i < graph_of.size(); ++i) {
    auto g = static_cast<std::size_t>(graph_of[i] - 1);
    local_id[i] = static_cast<NodeId>(graph_size[g]++);
  }

  std::vector<std::vector<Edge>> edges(num_graphs);
  {
    auto in = open_or_throw(edges_path);
    for_each_line(in, [&](std::size_t line_no, std::string_view line) {
      if (trim(line).empty()) return;
      auto tokens = tokenize(line, true);
      if (tokens.size() != 2) throw ParseError(line_no, edges_path.filename().string() + ": expected 'u, v'");
      std::int64_t a = parse_int(tokens[0], line_no, "node id");
      std::int64_t b = parse_int(tokens[1], line_no, "node id");
      for (std::int64_t x : {a, b})
        if (x < 1 || static_cast<std::size_t>(x) > graph_of.size())
          throw FormatError(edges_path.string() + ": line " + std::to_string(line_no) + ": node " + std::to_string(x) + " has no graph indicator");
      std::int64_t ga = graph_of[a - 1];
      std::int64_t gb = graph_of[b - 1];
      if (ga != gb)
        throw FormatError(edges_path.string() + ": line " + std::to_string(line_no) + ": edge crosses graphs " + std::to_string(ga) + " and " + std::to_string(gb));
      edges[ga - 1].emplace_back(local_id[a - 1], local_id[b - 1]);
    });
  }

  DatasetBundle bundle;
  bundle.name = name;
  bundle.graphs.reserve(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) bundle.graphs.push_back(Graph::from_edges(graph_size[g], edges[g]));

  bundle.class_values = raw_labels;
  std::sort(bundle.class_values.begin(), bundle.class_values.end());
  bundle.class_values.erase(std::unique(bundle.class_values.begin(), bundle.class_values.end()), bundle.class_values.end());
  bundle.labels.reserve(num_graphs);
  for (std::int64_t raw : raw_labels) {
    auto it = std::lower_bound(bundle.class_values.begin(), bundle.class_values.end(), raw);
    bundle.labels.push_back(static_cast<int>(it - bundle.class_values.begin()));
  }
  return bundle;
}

TemporalEdgeList load_temporal_edge_list(std::istream& in) {
  TemporalEdgeList list;
  for_each_line(in, [&](std::size_t line_no, std::string_view line) {
    if (skippable(line)) return;
    auto tokens = tokenize(line, false);
    if (tokens.size() < 3) throw ParseError(line_no, "expected 'src dst timestamp'");
    TemporalEdge e{parse_int(tokens[0], line_no, "node id"), parse_int(tokens[1], line_no, "node id"),
                   parse_int(tokens[2], line_no, "timestamp")};
    if (e.source < 0 || e.target < 0) throw ParseError(line_no, "node ids must be non-negative");
    list.records.push_back(e);
  });
  return list;
}

TemporalEdgeList load_temporal_edge_list(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_temporal_edge_list(in);
}

}  // namespace cliquescope
