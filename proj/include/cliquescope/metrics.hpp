#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cliquescope/clique_engine.hpp"
#include "cliquescope/graph.hpp"

namespace cliquescope {

struct ClusteringSummary {
  // |E_v|: edges inside the neighborhood of v.
  std::vector<std::uint64_t> neighborhood_edges;
  // c(v); 0 when deg(v) < 2.
  std::vector<double> local;
  double average = 0.0;  // acc(G); 0 on the empty graph
  double global = 0.0;   // cc(G); 0 without paths of length 2
};

// Triangle-based, independent of the clique engine.
ClusteringSummary clustering_summary(const Graph& g);

// Clique profile (C_3..C_k)/||.||_2, optionally followed by one trailing
// cc(G) component that is not renormalized.
struct ProfileVector {
  int k = 0;
  bool extended = false;
  std::vector<double> components;

  // Length k - 2; excludes the appended cc component.
  std::span<const double> clique_part() const { return {components.data(), static_cast<std::size_t>(k - 2)}; }
};

// Zero vector when the graph is triangle-free.
// Throws ArgumentError unless 3 <= k <= counts.kmax().
ProfileVector clique_profile(const CliqueCountVector& counts, int k);
ProfileVector extended_profile(const CliqueCountVector& counts, const ClusteringSummary& summary, int k);

// Nearest double to an exact count.
double to_double(const BigInt& v);

struct HOCCResult {
  int k = 0;
  std::vector<double> local;  // mu_k(G; v)
  double global = 0.0;        // mu_k(G)
};

// k-clustering coefficients. mu_k(G; v) is 0 whenever C_{k-1}(G; v) = 0 or
// deg(v) - k + 2 = 0, and mu_k(G) is 0 when its denominator vanishes.
// Throws ArgumentError unless 2 <= k <= node_counts.kmax().
HOCCResult higher_order_cc(const Graph& g, const NodeCliqueCounts& node_counts, int k);

// mu_k(G) from global and degree-weighted counts only:
//   (k-1) * k * C_k / (W_{k-1} - (k-2) * (k-1) * C_{k-1}),  W_j = sum_v deg(v) C_j(G; v).
// Requires 2 <= k <= counts.kmax().
double graph_hocc(const CliqueCountVector& counts, const DegreeWeightedCounts& weighted, int k);

}  // namespace cliquescope
