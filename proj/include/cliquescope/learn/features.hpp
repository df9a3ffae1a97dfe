#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquescope/clique_engine.hpp"
#include "cliquescope/io.hpp"

namespace cliquescope::learn {

enum class FeatureKind {
  clique_profile,     // C_k: normalized (C_3..C_k)
  extended_profile,   // D_k: C_k followed by cc(G)
  average_clustering, // acc(G), 1-dimensional
  global_clustering,  // cc(G), 1-dimensional
};

struct FeatureSpec {
  FeatureKind kind = FeatureKind::clique_profile;
  int k = 0;  // profile kinds only

  // "C_5", "D_4", "acc", "cc"
  std::string to_string() const;
  // Accepts the to_string() forms and "C5"/"D4". Throws ArgumentError.
  static FeatureSpec parse(std::string_view text);
  std::size_t dimension() const;
};

inline constexpr int kMinExperimentK = 4;
inline constexpr int kMaxExperimentK = 10;

// Dense row-major samples with class ids.
struct FeatureMatrix {
  std::size_t dim = 0;
  std::vector<double> values;
  std::vector<int> labels;
  std::string feature_spec;

  std::size_t rows() const noexcept { return labels.size(); }
  std::span<const double> row(std::size_t i) const { return {values.data() + i * dim, dim}; }
  // One past the largest class id.
  int num_classes() const;
};

// One row per graph. Profile kinds require 4 <= k <= 10 (ArgumentError).
FeatureMatrix assemble_features(const DatasetBundle& bundle, const FeatureSpec& spec, const CountOptions& options = {});

// Feature vector of a single graph under `spec` (no range restriction beyond
// what the metrics require, so k = 3 is allowed here).
std::vector<double> graph_features(const Graph& g, const FeatureSpec& spec);

// `graph_id,label,f1..fd`.
void write_feature_csv(std::ostream& out, const FeatureMatrix& m);

}  // namespace cliquescope::learn
