#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cliquescope/learn/features.hpp"

namespace cliquescope::learn {

enum class Penalty { l2, l1 };

struct SVMConfig {
  double C = 1.0;
  Penalty penalty = Penalty::l2;
  int max_iterations = 10000;
  double tolerance = 1e-4;
  std::uint64_t seed = 0;
};

// One linear machine per class (one-vs-rest), or a single machine for two
// classes. Each machine stores dim weights followed by the bias.
struct SVMModel {
  std::size_t dim = 0;
  int num_classes = 0;
  std::vector<double> weights;

  std::size_t num_machines() const noexcept { return num_classes == 2 ? 1 : static_cast<std::size_t>(num_classes); }
  double score(std::size_t machine, std::span<const double> x) const;
  // Binary: class 1 iff the score is positive. Multiclass: argmax, ties to the
  // lowest class id.
  int predict(std::span<const double> x) const;
};

// Hinge-loss linear SVM on the given rows of `data`:
//   min 1/2 penalty(w) + C sum_i max(0, 1 - y_i (w.x_i + b)).
// L2 uses dual coordinate descent, L1 a subgradient method.
// Throws TrainingError with fewer than two classes, ValidationError on
// non-finite features or C <= 0.
SVMModel train_linear_svm(const FeatureMatrix& data, std::span<const std::size_t> rows, const SVMConfig& cfg);
SVMModel train_linear_svm(const FeatureMatrix& data, const SVMConfig& cfg);

// Percentage in [0, 100].
double accuracy(const SVMModel& model, const FeatureMatrix& data, std::span<const std::size_t> rows);

}  // namespace cliquescope::learn
