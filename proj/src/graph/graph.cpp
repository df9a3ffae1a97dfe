#include "cliquescope/graph.hpp"

#include <algorithm>

namespace cliquescope {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.resize(arcs.size());
  for (auto [u, v] : arcs) ++g.offsets_[u + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  for (std::size_t i = 0; i < arcs.size(); ++i) g.targets_[i] = arcs[i].second;
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_nodes(); ++v) best = std::max(best, degree(static_cast<NodeId>(v)));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace cliquescope
