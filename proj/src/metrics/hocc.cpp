#include <algorithm>
#include <string>

#include "cliquescope/error.hpp"
#include "cliquescope/metrics.hpp"

namespace cliquescope {
namespace {

void check_order(int k, int kmax) {
  if (k < 2 || k > kmax)
    throw ArgumentError("clustering order k=" + std::to_string(k) + " outside [2, " + std::to_string(kmax) + "]");
}

}  // namespace

HOCCResult higher_order_cc(const Graph& g, const NodeCliqueCounts& node_counts, int k) {
  check_order(k, node_counts.kmax());
  HOCCResult r;
  r.k = k;
  r.local.assign(g.num_nodes(), 0.0);

  BigInt numerator = 0;
  BigInt denominator = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const BigInt& closed = node_counts.at(v, k);
    const BigInt& open = node_counts.at(v, k - 1);
    const auto deg = static_cast<long long>(g.degree(v));
    // C_{k-1}(G; v) > 0 implies deg(v) >= k - 2, so the factor is non-negative.
    const long long free_neighbors = deg - k + 2;
    if (open.is_zero() || free_neighbors <= 0) continue;
    BigInt den = open * free_neighbors;
    BigInt num = closed * (k - 1);
    r.local[v] = ratio(num, den);
    numerator += num;
    denominator += den;
  }
  r.global = denominator.is_zero() ? 0.0 : ratio(numerator, denominator);
  return r;
}

double graph_hocc(const CliqueCountVector& counts, const DegreeWeightedCounts& weighted, int k) {
  check_order(k, std::min(counts.kmax(), weighted.kmax()));
  // sum_v C_{k-1}(G; v) (deg(v) - k + 2) = W_{k-1} - (k-2) * (k-1) * C_{k-1}
  BigInt denominator = weighted[k - 1] - BigInt(counts[k - 1]) * (k - 2) * (k - 1);
  if (denominator <= 0) return 0.0;
  BigInt numerator = BigInt(counts[k]) * (k - 1) * k;
  return ratio(numerator, denominator);
}

}  // namespace cliquescope
