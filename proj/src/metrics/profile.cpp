#include <cmath>
#include <string>

#include "cliquescope/error.hpp"
#include "cliquescope/metrics.hpp"

namespace cliquescope {

double to_double(const BigInt& v) { return ratio(v, BigInt(1)); }

ProfileVector clique_profile(const CliqueCountVector& counts, int k) {
  if (k < 3 || k > counts.kmax())
    throw ArgumentError("profile order k=" + std::to_string(k) + " outside [3, " + std::to_string(counts.kmax()) + "]");
  ProfileVector p;
  p.k = k;
  p.components.assign(static_cast<std::size_t>(k - 2), 0.0);
  if (counts[3].is_zero()) return p;

  // Divide by the largest count first so huge counts neither overflow nor
  // square out of range.
  const BigInt* largest = &counts[3];
  for (int j = 4; j <= k; ++j)
    if (counts[j] > *largest) largest = &counts[j];
  double norm_sq = 0.0;
  for (int j = 3; j <= k; ++j) {
    double& c = p.components[j - 3];
    c = ratio(counts[j], *largest);
    norm_sq += c * c;
  }
  const double norm = std::sqrt(norm_sq);
  for (double& c : p.components) c /= norm;
  return p;
}

ProfileVector extended_profile(const CliqueCountVector& counts, const ClusteringSummary& summary, int k) {
  ProfileVector p = clique_profile(counts, k);
  p.extended = true;
  p.components.push_back(summary.global);
  return p;
}

}  // namespace cliquescope
