#include "cliquescope/learn/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cliquescope/error.hpp"
#include "cliquescope/kernels.hpp"
#include "rng.hpp"

namespace cliquescope::learn {
namespace {

// Training rows augmented with a constant 1 so the bias is the last weight.
struct Augmented {
  std::size_t width = 0;
  std::vector<double> values;
  std::span<const double> row(std::size_t i) const { return {values.data() + i * width, width}; }
};

Augmented augment(const FeatureMatrix& data, std::span<const std::size_t> rows) {
  Augmented a;
  a.width = data.dim + 1;
  a.values.reserve(rows.size() * a.width);
  for (std::size_t r : rows) {
    auto x = data.row(r);
    a.values.insert(a.values.end(), x.begin(), x.end());
    a.values.push_back(1.0);
  }
  return a;
}

// Dual coordinate descent for the hinge loss with shrinking, after Hsieh et
// al. (ICML 2008). y[i] in {-1, +1}.
std::vector<double> solve_l2_dual(const Augmented& x, std::span<const double> y, const SVMConfig& cfg) {
  const std::size_t l = y.size();
  const auto& k = kernels::active();
  std::vector<double> w(x.width, 0.0);
  std::vector<double> alpha(l, 0.0);
  std::vector<double> diag(l);
  for (std::size_t i = 0; i < l; ++i) diag[i] = k.dot(x.row(i).data(), x.row(i).data(), x.width);

  std::vector<std::size_t> index(l);
  std::iota(index.begin(), index.end(), std::size_t{0});
  detail::Rng rng(cfg.seed);

  const double inf = std::numeric_limits<double>::infinity();
  double pg_max_old = inf, pg_min_old = -inf;
  std::size_t active = l;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    double pg_max = -inf, pg_min = inf;
    rng.shuffle(std::span<std::size_t>(index.data(), active));
    for (std::size_t s = 0; s < active; ++s) {
      const std::size_t i = index[s];
      const double g = y[i] * k.dot(w.data(), x.row(i).data(), x.width) - 1.0;
      double pg = 0.0;
      if (alpha[i] == 0.0) {
        if (g > pg_max_old) {
          std::swap(index[s], index[--active]);
          --s;
          continue;
        }
        if (g < 0.0) pg = g;
      } else if (alpha[i] == cfg.C) {
        if (g < pg_min_old) {
          std::swap(index[s], index[--active]);
          --s;
          continue;
        }
        if (g > 0.0) pg = g;
      } else {
        pg = g;
      }
      pg_max = std::max(pg_max, pg);
      pg_min = std::min(pg_min, pg);
      if (std::fabs(pg) > 1e-12) {
        const double old = alpha[i];
        alpha[i] = std::min(std::max(old - g / diag[i], 0.0), cfg.C);
        k.axpy((alpha[i] - old) * y[i], x.row(i).data(), w.data(), x.width);
      }
    }
    if (pg_max - pg_min <= cfg.tolerance) {
      if (active == l) break;
      // Converged on the shrunk problem; verify on the full one.
      active = l;
      pg_max_old = inf;
      pg_min_old = -inf;
      continue;
    }
    pg_max_old = pg_max <= 0.0 ? inf : pg_max;
    pg_min_old = pg_min >= 0.0 ? -inf : pg_min;
  }
  return w;
}

double l1_objective(const Augmented& x, std::span<const double> y, std::span<const double> w, double C) {
  double reg = 0.0;
  for (std::size_t f = 0; f + 1 < w.size(); ++f) reg += std::fabs(w[f]);
  double loss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) loss += std::max(0.0, 1.0 - y[i] * kernels::dot(w, x.row(i)));
  return 0.5 * reg + C * loss;
}

// Normalized subgradient descent on 1/2 ||w||_1 + C sum hinge (bias not
// penalized); returns the best iterate seen.
std::vector<double> solve_l1_subgradient(const Augmented& x, std::span<const double> y, const SVMConfig& cfg) {
  const std::size_t width = x.width;
  std::vector<double> w(width, 0.0), best = w, grad(width);
  double best_obj = l1_objective(x, y, w, cfg.C);
  for (int t = 1; t <= cfg.max_iterations; ++t) {
    for (std::size_t f = 0; f + 1 < width; ++f) grad[f] = 0.5 * ((w[f] > 0.0) - (w[f] < 0.0));
    grad[width - 1] = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] * kernels::dot(w, x.row(i)) < 1.0) kernels::axpy(-cfg.C * y[i], x.row(i), grad);
    const double norm = std::sqrt(kernels::dot(grad, grad));
    if (norm < cfg.tolerance) break;
    kernels::axpy(-1.0 / (std::sqrt(static_cast<double>(t)) * norm), grad, w);
    const double obj = l1_objective(x, y, w, cfg.C);
    if (obj < best_obj) {
      best_obj = obj;
      best = w;
    }
  }
  return best;
}

}  // namespace

double SVMModel::score(std::size_t machine, std::span<const double> x) const {
  const double* w = weights.data() + machine * (dim + 1);
  return kernels::active().dot(w, x.data(), dim) + w[dim];
}

int SVMModel::predict(std::span<const double> x) const {
  if (num_classes == 2) return score(0, x) > 0.0 ? 1 : 0;
  int best = 0;
  double best_score = score(0, x);
  for (int c = 1; c < num_classes; ++c) {
    double s = score(static_cast<std::size_t>(c), x);
    if (s > best_score) {
      best = c;
      best_score = s;
    }
  }
  return best;
}

SVMModel train_linear_svm(const FeatureMatrix& data, std::span<const std::size_t> rows, const SVMConfig& cfg) {
  if (!(cfg.C > 0.0) || !std::isfinite(cfg.C)) throw ValidationError("SVM parameter C must be positive and finite");
  for (std::size_t r : rows)
    for (double v : data.row(r))
      if (!std::isfinite(v)) throw ValidationError("non-finite feature in row " + std::to_string(r));

  std::vector<int> present;
  for (std::size_t r : rows) present.push_back(data.labels[r]);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  if (present.size() < 2) throw TrainingError("training data must contain at least two classes");

  SVMModel model;
  model.dim = data.dim;
  model.num_classes = data.num_classes();
  const Augmented x = augment(data, rows);
  std::vector<double> y(rows.size());
  for (std::size_t m = 0; m < model.num_machines(); ++m) {
    // Binary problems use class 1 as the positive side.
    const int positive = model.num_classes == 2 ? 1 : static_cast<int>(m);
    for (std::size_t i = 0; i < rows.size(); ++i) y[i] = data.labels[rows[i]] == positive ? 1.0 : -1.0;
    auto w = cfg.penalty == Penalty::l2 ? solve_l2_dual(x, y, cfg) : solve_l1_subgradient(x, y, cfg);
    model.weights.insert(model.weights.end(), w.begin(), w.end());
  }
  return model;
}

SVMModel train_linear_svm(const FeatureMatrix& data, const SVMConfig& cfg) {
  std::vector<std::size_t> all(data.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return train_linear_svm(data, all, cfg);
}

double accuracy(const SVMModel& model, const FeatureMatrix& data, std::span<const std::size_t> rows) {
  if (rows.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t r : rows) correct += model.predict(data.row(r)) == data.labels[r];
  return 100.0 * static_cast<double>(correct) / static_cast<double>(rows.size());
}

}  // namespace cliquescope::learn
