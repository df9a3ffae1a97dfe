#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cliquescope/learn/features.hpp"
#include "cliquescope/learn/svm.hpp"

namespace cliquescope::learn {

// fold[i] in [0, n_folds) for sample i. Classes are shuffled independently
// with one seeded generator and dealt round-robin, the deal continuing across
// classes, so per-fold class counts are within one of the exact proportion
// and fold sizes within one of each other.
// Throws StratificationError naming a class with fewer than n_folds members.
std::vector<int> stratified_folds(std::span<const int> labels, int n_folds, std::uint64_t seed);

// 10^-3, 10^-2, ..., 10^3
std::vector<double> default_c_grid();

struct CVOptions {
  std::vector<double> grid = default_c_grid();
  int repeats = 10;
  int n_folds = 10;
  std::uint64_t seed = 0;
  SVMConfig svm;  // C is taken from the grid
  int threads = 0;
};

struct GridPoint {
  double C = 0.0;
  double mean = 0.0;
  double std = 0.0;
};

struct CVReport {
  std::string dataset;
  std::string feature_spec;
  double chosen_C = 0.0;
  double mean = 0.0;  // percent
  double std = 0.0;   // percent, population
  // repeat-major: fold_accuracies[r * n_folds + f]
  std::vector<double> fold_accuracies;
  std::vector<GridPoint> grid;
  std::uint64_t seed = 0;
  int repeats = 0;
  int n_folds = 0;
};

// Repeated stratified k-fold CV for every C in the grid (the same splits for
// every C); reports the C with the best mean accuracy, first on ties.
CVReport cross_validate(const FeatureMatrix& features, const CVOptions& options);

// Population mean and standard deviation.
std::pair<double, double> mean_std(std::span<const double> values);

void write_report_json(std::ostream& out, const CVReport& report);
// "70.37±4.11"
std::string summary_line(const CVReport& report);

}  // namespace cliquescope::learn
