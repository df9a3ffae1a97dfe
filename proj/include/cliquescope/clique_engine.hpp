#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cliquescope/exact.hpp"
#include "cliquescope/graph.hpp"

namespace cliquescope {

// Exact C_j(G) for j = 1..kmax.
class CliqueCountVector {
 public:
  CliqueCountVector() = default;
  explicit CliqueCountVector(int kmax) : counts_(static_cast<std::size_t>(kmax)) {}
  // counts[j-1] = C_j.
  explicit CliqueCountVector(std::vector<BigInt> counts) : counts_(std::move(counts)) {}

  int kmax() const noexcept { return static_cast<int>(counts_.size()); }
  const BigInt& operator[](int j) const { return counts_.at(static_cast<std::size_t>(j - 1)); }
  BigInt& operator[](int j) { return counts_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<BigInt>& values() const noexcept { return counts_; }

  friend bool operator==(const CliqueCountVector&, const CliqueCountVector&) = default;

 private:
  std::vector<BigInt> counts_;
};

// Exact C_j(G; v) for every node and j = 1..kmax, row-major by node.
class NodeCliqueCounts {
 public:
  NodeCliqueCounts() = default;
  NodeCliqueCounts(std::size_t num_nodes, int kmax)
      : num_nodes_(num_nodes), kmax_(kmax), counts_(num_nodes * static_cast<std::size_t>(kmax)) {}

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  int kmax() const noexcept { return kmax_; }
  const BigInt& at(NodeId v, int j) const { return counts_.at(index(v, j)); }
  BigInt& at(NodeId v, int j) { return counts_.at(index(v, j)); }

  // Column sum over all nodes; equals j * C_j(G).
  BigInt column_sum(int j) const;

  friend bool operator==(const NodeCliqueCounts&, const NodeCliqueCounts&) = default;

 private:
  std::size_t index(NodeId v, int j) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(kmax_) + static_cast<std::size_t>(j - 1); }

  std::size_t num_nodes_ = 0;
  int kmax_ = 0;
  std::vector<BigInt> counts_;
};

// Sigma_v deg(v) * C_j(G; v) for j = 1..kmax. Together with the global counts
// this is all the graph-level k-clustering coefficient needs, without storing
// per-node rows.
class DegreeWeightedCounts {
 public:
  DegreeWeightedCounts() = default;
  explicit DegreeWeightedCounts(std::vector<BigInt> sums) : sums_(std::move(sums)) {}

  int kmax() const noexcept { return static_cast<int>(sums_.size()); }
  const BigInt& operator[](int j) const { return sums_.at(static_cast<std::size_t>(j - 1)); }

 private:
  std::vector<BigInt> sums_;
};

struct CountOptions {
  // 0 means the OpenMP default.
  int threads = 0;
};

inline constexpr int kDefaultKmax = 10;

// Pivot-based succinct clique tree over the degeneracy order. Cliques are
// never materialized: each root-to-leaf path with h hold and p pivot
// vertices stands for binomial(p, j - h) cliques of order j.
// Throws ArgumentError if kmax < 3.
CliqueCountVector count_cliques(const Graph& g, int kmax = kDefaultKmax, const CountOptions& options = {});

NodeCliqueCounts count_cliques_per_node(const Graph& g, int kmax = kDefaultKmax, const CountOptions& options = {});

std::pair<CliqueCountVector, DegreeWeightedCounts> count_cliques_degree_weighted(const Graph& g, int kmax,
                                                                                 const CountOptions& options = {});

// Global counts recovered from per-node counts (C_j = column_sum(j) / j).
CliqueCountVector aggregate(const NodeCliqueCounts& node_counts);

// Test-scale oracle: explicit recursive enumeration of every clique of order
// <= kmax. Refuses graphs with more than 40 nodes.
std::pair<CliqueCountVector, NodeCliqueCounts> brute_force_counts(const Graph& g, int kmax);

inline constexpr std::size_t kBruteForceMaxNodes = 40;

}  // namespace cliquescope
