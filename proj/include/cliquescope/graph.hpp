#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquescope {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable simple undirected graph in CSR form. Neighbor lists are strictly
// ascending, symmetric, and loop-free.
class Graph {
 public:
  Graph() = default;

  // Builds the simple graph on nodes [0, n) spanned by `edges`. Direction is
  // discarded, self-loops are dropped and duplicate edges collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  // O(log deg(u)).
  bool has_edge(NodeId u, NodeId v) const noexcept;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Min-degree peeling order. coreness[v] is v's degree at removal, made
// non-decreasing along the removal sequence.
struct DegeneracyOrder {
  std::vector<NodeId> order;
  std::vector<std::size_t> coreness;

  std::size_t degeneracy() const noexcept;
};

// Ties are broken by smallest node id.
DegeneracyOrder degeneracy_order(const Graph& g);

}  // namespace cliquescope
