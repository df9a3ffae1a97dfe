#include "cliquescope/learn/features.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "cliquescope/error.hpp"
#include "cliquescope/metrics.hpp"

namespace cliquescope::learn {

std::string FeatureSpec::to_string() const {
  switch (kind) {
    case FeatureKind::clique_profile: return "C_" + std::to_string(k);
    case FeatureKind::extended_profile: return "D_" + std::to_string(k);
    case FeatureKind::average_clustering: return "acc";
    case FeatureKind::global_clustering: return "cc";
  }
  return {};
}

FeatureSpec FeatureSpec::parse(std::string_view text) {
  if (text == "acc") return {FeatureKind::average_clustering, 0};
  if (text == "cc") return {FeatureKind::global_clustering, 0};
  if (text.size() >= 2 && (text[0] == 'C' || text[0] == 'D')) {
    FeatureSpec spec;
    spec.kind = text[0] == 'C' ? FeatureKind::clique_profile : FeatureKind::extended_profile;
    std::string_view digits = text.substr(text[1] == '_' ? 2 : 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return spec;
  }
  throw ArgumentError("unknown feature spec '" + std::string(text) + "' (expected C_k, D_k, acc or cc)");
}

std::size_t FeatureSpec::dimension() const {
  switch (kind) {
    case FeatureKind::clique_profile: return static_cast<std::size_t>(k - 2);
    case FeatureKind::extended_profile: return static_cast<std::size_t>(k - 1);
    default: return 1;
  }
}

int FeatureMatrix::num_classes() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<double> graph_features(const Graph& g, const FeatureSpec& spec) {
  switch (spec.kind) {
    case FeatureKind::average_clustering: return {clustering_summary(g).average};
    case FeatureKind::global_clustering: return {clustering_summary(g).global};
    case FeatureKind::clique_profile: return clique_profile(count_cliques(g, std::max(spec.k, 3), {1}), spec.k).components;
    case FeatureKind::extended_profile:
      return extended_profile(count_cliques(g, std::max(spec.k, 3), {1}), clustering_summary(g), spec.k).components;
  }
  return {};
}

FeatureMatrix assemble_features(const DatasetBundle& bundle, const FeatureSpec& spec, const CountOptions& options) {
  const bool profile = spec.kind == FeatureKind::clique_profile || spec.kind == FeatureKind::extended_profile;
  if (profile && (spec.k < kMinExperimentK || spec.k > kMaxExperimentK))
    throw ArgumentError("profile order k=" + std::to_string(spec.k) + " outside [" + std::to_string(kMinExperimentK) + ", " +
                        std::to_string(kMaxExperimentK) + "]");

  FeatureMatrix m;
  m.dim = spec.dimension();
  m.labels = bundle.labels;
  m.feature_spec = spec.to_string();
  m.values.assign(bundle.graphs.size() * m.dim, 0.0);

  const auto count = static_cast<std::int64_t>(bundle.graphs.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    auto row = graph_features(bundle.graphs[static_cast<std::size_t>(i)], spec);
    std::copy(row.begin(), row.end(), m.values.begin() + i * static_cast<std::int64_t>(m.dim));
  }
  return m;
}

void write_feature_csv(std::ostream& out, const FeatureMatrix& m) {
  out << "graph_id,label";
  for (std::size_t f = 1; f <= m.dim; ++f) out << ",f" << f;
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << i << ',' << m.labels[i];
    for (double x : m.row(i)) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace cliquescope::learn
