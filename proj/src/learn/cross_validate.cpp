#include "cliquescope/learn/cross_validate.hpp"

#include <omp.h>

#include <cmath>
#include <exception>

#include "cliquescope/error.hpp"

namespace cliquescope::learn {

std::vector<double> default_c_grid() { return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3}; }

std::pair<double, double> mean_std(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

CVReport cross_validate(const FeatureMatrix& features, const CVOptions& options) {
  if (options.grid.empty()) throw ArgumentError("C grid is empty");
  if (options.repeats < 1) throw ArgumentError("repeats must be positive");

  const auto repeats = static_cast<std::size_t>(options.repeats);
  const auto folds = static_cast<std::size_t>(options.n_folds);
  std::vector<std::vector<int>> assignment;
  for (std::size_t r = 0; r < repeats; ++r) {
    // Independent stream per repeat.
    std::uint64_t repeat_seed = options.seed * 0x9e3779b97f4a7c15ULL + r;
    assignment.push_back(stratified_folds(features.labels, options.n_folds, repeat_seed));
  }

  const std::size_t per_grid = repeats * folds;
  const std::size_t tasks = options.grid.size() * per_grid;
  std::vector<double> acc(tasks, 0.0);
  std::exception_ptr failure;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(tasks); ++t) {
    const auto task = static_cast<std::size_t>(t);
    const std::size_t g = task / per_grid;
    const std::size_t r = (task % per_grid) / folds;
    const auto f = static_cast<int>(task % folds);
    try {
      std::vector<std::size_t> train, test;
      for (std::size_t i = 0; i < features.rows(); ++i) (assignment[r][i] == f ? test : train).push_back(i);
      SVMConfig cfg = options.svm;
      cfg.C = options.grid[g];
      cfg.seed = options.seed + r * folds + static_cast<std::size_t>(f);
      SVMModel model = train_linear_svm(features, train, cfg);
      acc[task] = accuracy(model, features, test);
    } catch (...) {
#pragma omp critical(cliquescope_cv_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CVReport report;
  report.feature_spec = features.feature_spec;
  report.seed = options.seed;
  report.repeats = options.repeats;
  report.n_folds = options.n_folds;
  std::size_t best = 0;
  for (std::size_t g = 0; g < options.grid.size(); ++g) {
    auto [mean, sd] = mean_std(std::span<const double>(acc.data() + g * per_grid, per_grid));
    report.grid.push_back({options.grid[g], mean, sd});
    if (mean > report.grid[best].mean) best = g;
  }
  report.chosen_C = report.grid[best].C;
  report.mean = report.grid[best].mean;
  report.std = report.grid[best].std;
  report.fold_accuracies.assign(acc.begin() + static_cast<std::ptrdiff_t>(best * per_grid),
                                acc.begin() + static_cast<std::ptrdiff_t>((best + 1) * per_grid));
  return report;
}

}  // namespace cliquescope::learn
