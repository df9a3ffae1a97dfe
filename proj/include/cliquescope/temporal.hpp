#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cliquescope/clique_engine.hpp"
#include "cliquescope/graph.hpp"
#include "cliquescope/io.hpp"

namespace cliquescope {

inline constexpr std::size_t kDefaultSteps = 120;
inline constexpr int kDefaultTrajectoryKmax = 25;

// Cumulative prefixes of a timestamp-sorted edge stream over a fixed node
// universe. Snapshot i (1-based) holds the first i * increment records; the
// last snapshot holds all of them.
struct SnapshotSeries {
  std::size_t increment = 0;
  std::vector<std::size_t> prefix_lengths;  // raw records per snapshot
  std::vector<Graph> snapshots;
  // original_ids[v] is the stream id of node v.
  std::vector<std::int64_t> original_ids;

  std::size_t step_count() const noexcept { return snapshots.size(); }
};

// Stable sort by timestamp; ties keep input order. Throws ArgumentError if
// the stream is empty, steps is 0, or steps exceeds the record count.
SnapshotSeries build_snapshots(const TemporalEdgeList& stream, std::size_t steps = kDefaultSteps);

// mu_k(G_i) for k = 3..kmax (rows) and snapshots i = 1..step_count (columns).
struct TrajectoryMatrix {
  int kmax = 0;
  std::size_t steps = 0;
  std::vector<double> values;  // row-major, row k - 3

  double at(int k, std::size_t snapshot_index) const {
    return values.at(static_cast<std::size_t>(k - 3) * steps + (snapshot_index - 1));
  }
};

// Throws ArgumentError if kmax < 3.
TrajectoryMatrix hocc_trajectories(const SnapshotSeries& series, int kmax = kDefaultTrajectoryKmax,
                                   const CountOptions& options = {});

// CSV with header `k,snapshot_index,mu`, one row per entry.
void write_trajectory_csv(std::ostream& out, const TrajectoryMatrix& m);

}  // namespace cliquescope
