#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>

#include "cliquescope/error.hpp"
#include "cliquescope/metrics.hpp"
#include "cliquescope/temporal.hpp"

namespace cliquescope {

SnapshotSeries build_snapshots(const TemporalEdgeList& stream, std::size_t steps) {
  const auto& records = stream.records;
  if (records.empty()) throw ArgumentError("temporal edge list is empty");
  if (steps == 0) throw ArgumentError("snapshot count must be positive");
  if (steps > records.size())
    throw ArgumentError("snapshot count " + std::to_string(steps) + " exceeds record count " + std::to_string(records.size()));

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return records[a].timestamp < records[b].timestamp; });

  SnapshotSeries series;
  std::unordered_map<std::int64_t, NodeId> index;
  auto compact = [&](std::int64_t id) {
    auto [it, inserted] = index.try_emplace(id, static_cast<NodeId>(series.original_ids.size()));
    if (inserted) series.original_ids.push_back(id);
    return it->second;
  };
  std::vector<Edge> sorted_edges;
  sorted_edges.reserve(records.size());
  for (std::size_t i : order) {
    NodeId u = compact(records[i].source);
    NodeId v = compact(records[i].target);
    sorted_edges.emplace_back(u, v);
  }

  const std::size_t n = series.original_ids.size();
  series.increment = records.size() / steps;
  for (std::size_t i = 1; i <= steps; ++i) {
    const std::size_t length = (i == steps) ? records.size() : i * series.increment;
    series.prefix_lengths.push_back(length);
    series.snapshots.push_back(Graph::from_edges(n, std::span<const Edge>(sorted_edges.data(), length)));
  }
  return series;
}

TrajectoryMatrix hocc_trajectories(const SnapshotSeries& series, int kmax, const CountOptions& options) {
  if (kmax < 3) throw ArgumentError("kmax must be at least 3, got " + std::to_string(kmax));
  TrajectoryMatrix m;
  m.kmax = kmax;
  m.steps = series.step_count();
  m.values.assign(static_cast<std::size_t>(kmax - 2) * m.steps, 0.0);
  for (std::size_t i = 0; i < m.steps; ++i) {
    auto [counts, weighted] = count_cliques_degree_weighted(series.snapshots[i], kmax, options);
    for (int k = 3; k <= kmax; ++k) m.values[static_cast<std::size_t>(k - 3) * m.steps + i] = graph_hocc(counts, weighted, k);
  }
  return m;
}

void write_trajectory_csv(std::ostream& out, const TrajectoryMatrix& m) {
  out << "k,snapshot_index,mu\n";
  char buf[64];
  for (int k = 3; k <= m.kmax; ++k) {
    for (std::size_t i = 1; i <= m.steps; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", m.at(k, i));
      out << k << ',' << i << ',' << buf << '\n';
    }
  }
}

}  // namespace cliquescope
