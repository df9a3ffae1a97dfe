#include <algorithm>
#include <set>

#include "cliquescope/graph.hpp"

namespace cliquescope {

std::size_t DegeneracyOrder::degeneracy() const noexcept {
  return coreness.empty() ? 0 : *std::max_element(coreness.begin(), coreness.end());
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_nodes();
  DegeneracyOrder result;
  result.order.reserve(n);
  result.coreness.assign(n, 0);

  // (current degree, id): the set's ordering gives the smallest-id tie-break.
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, NodeId>> queue;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }

  std::vector<bool> removed(n, false);
  std::size_t level = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    level = std::max(level, d);
    result.coreness[v] = level;
    result.order.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      --degree[u];
      queue.emplace(degree[u], u);
    }
  }
  return result;
}

}  // namespace cliquescope
