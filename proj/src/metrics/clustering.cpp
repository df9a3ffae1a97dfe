#include "cliquescope/metrics.hpp"

namespace cliquescope {
namespace {

std::uint64_t intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::uint64_t count = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

ClusteringSummary clustering_summary(const Graph& g) {
  const std::size_t n = g.num_nodes();
  ClusteringSummary s;
  s.neighborhood_edges.assign(n, 0);
  s.local.assign(n, 0.0);

  std::uint64_t closed = 0;
  std::uint64_t paths = 0;
  double local_sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    std::uint64_t twice = 0;
    for (NodeId u : nv) twice += intersection_size(nv, g.neighbors(u));
    const std::uint64_t ev = twice / 2;
    const std::uint64_t d = nv.size();
    const std::uint64_t pairs = d * (d - (d > 0 ? 1 : 0)) / 2;
    s.neighborhood_edges[v] = ev;
    if (d >= 2) s.local[v] = static_cast<double>(ev) / static_cast<double>(pairs);
    local_sum += s.local[v];
    closed += ev;
    paths += pairs;
  }
  s.average = n == 0 ? 0.0 : local_sum / static_cast<double>(n);
  s.global = paths == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(paths);
  return s;
}

}  // namespace cliquescope
