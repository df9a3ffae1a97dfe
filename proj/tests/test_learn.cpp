#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cliquescope/error.hpp"
#include "cliquescope/learn/cross_validate.hpp"
#include "cliquescope/learn/features.hpp"
#include "cliquescope/learn/svm.hpp"
#include "cliquescope/metrics.hpp"
#include "cliquescope/clique_engine.hpp"
#include "test_support.hpp"

using namespace cliquescope;
using namespace cliquescope::learn;
using namespace cliquescope::testing;

namespace {

FeatureMatrix matrix(std::size_t dim, std::vector<double> values, std::vector<int> labels) {
  FeatureMatrix m;
  m.dim = dim;
  m.values = std::move(values);
  m.labels = std::move(labels);
  m.feature_spec = "test";
  return m;
}

// Two or more isotropic Gaussian blobs in the plane.
FeatureMatrix blobs(std::size_t per_class, std::vector<std::pair<double, double>> centers, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  FeatureMatrix m = matrix(2, {}, {});
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (std::size_t i = 0; i < per_class; ++i) {
      m.values.push_back(centers[c].first + noise(rng));
      m.values.push_back(centers[c].second + noise(rng));
      m.labels.push_back(static_cast<int>(c));
    }
  return m;
}

double training_accuracy(const FeatureMatrix& m, const SVMModel& model) {
  std::vector<std::size_t> all(m.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return accuracy(model, m, all);
}

// Best training accuracy of any line w = (cos a, sin a), offset b, over a
// fine sweep of angles and offsets (both orientations).
double best_linear_separator(const FeatureMatrix& m) {
  double best = 0.0;
  for (int step = 0; step < 720; ++step) {
    const double a = step * M_PI / 360.0;
    const double wx = std::cos(a), wy = std::sin(a);
    std::vector<double> proj;
    for (std::size_t i = 0; i < m.rows(); ++i) proj.push_back(wx * m.row(i)[0] + wy * m.row(i)[1]);
    std::vector<double> cuts = proj;
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(cuts.back() + 1.0);
    double prev = cuts.front() - 1.0;
    for (double c : cuts) {
      const double t = (prev + c) / 2.0;
      prev = c;
      std::size_t correct = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) correct += (proj[i] > t) == (m.labels[i] == 1);
      best = std::max(best, 100.0 * static_cast<double>(correct) / static_cast<double>(m.rows()));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("feature spec parsing") {
  CHECK(FeatureSpec::parse("C_5").to_string() == "C_5");
  CHECK(FeatureSpec::parse("D4").to_string() == "D_4");
  CHECK(FeatureSpec::parse("acc").kind == FeatureKind::average_clustering);
  CHECK(FeatureSpec::parse("cc").dimension() == 1);
  CHECK(FeatureSpec::parse("D_10").dimension() == 9);
  CHECK_THROWS_AS(FeatureSpec::parse("E_4"), ArgumentError);
  CHECK_THROWS_AS(FeatureSpec::parse("C_"), ArgumentError);
}

TEST_CASE("assemble features for a toy bundle") {
  DatasetBundle b;
  b.name = "toy";
  b.graphs = {complete_graph(4), path_graph(3)};
  b.labels = {0, 1};
  b.class_values = {0, 1};
  auto m = assemble_features(b, {FeatureKind::clique_profile, 4});
  REQUIRE(m.dim == 2);
  CHECK(m.row(0)[0] == doctest::Approx(4.0 / std::sqrt(17.0)).epsilon(1e-15));
  CHECK(m.row(0)[1] == doctest::Approx(1.0 / std::sqrt(17.0)).epsilon(1e-15));
  CHECK(m.row(1)[0] == 0.0);
  CHECK(m.row(1)[1] == 0.0);
  CHECK(m.feature_spec == "C_4");

  CHECK(assemble_features(b, {FeatureKind::extended_profile, 10}).dim == 9);
  auto acc = assemble_features(b, {FeatureKind::average_clustering, 0});
  CHECK(acc.dim == 1);
  CHECK(acc.row(0)[0] == 1.0);
  CHECK_THROWS_AS(assemble_features(b, {FeatureKind::clique_profile, 3}), ArgumentError);
  CHECK_THROWS_AS(assemble_features(b, {FeatureKind::extended_profile, 11}), ArgumentError);

  std::ostringstream csv;
  write_feature_csv(csv, m);
  CHECK(csv.str().rfind("graph_id,label,f1,f2\n0,0,0.9701425001453318", 0) == 0);
}

TEST_CASE("features are invariant to scaling clique counts") {
  Graph g = random_graph(30, 0.5, 4);
  auto counts = count_cliques(g, 10);
  std::vector<BigInt> scaled;
  for (const auto& c : counts.values()) scaled.push_back(c * 1000003);
  auto row = graph_features(g, {FeatureKind::clique_profile, 8});
  auto again = clique_profile(CliqueCountVector(scaled), 8).components;
  for (std::size_t i = 0; i < row.size(); ++i) CHECK(std::fabs(row[i] - again[i]) <= 1e-12);
}

TEST_CASE("separable one-dimensional data") {
  std::vector<double> x;
  std::vector<int> y;
  for (int i = 0; i < 50; ++i) {
    x.push_back(0.0);
    y.push_back(0);
    x.push_back(1.0);
    y.push_back(1);
  }
  auto m = matrix(1, x, y);
  CHECK(training_accuracy(m, train_linear_svm(m, {.C = 1.0})) == 100.0);
  CHECK(training_accuracy(m, train_linear_svm(m, {.C = 1.0, .penalty = Penalty::l1})) == 100.0);

  for (int& label : m.labels) label = 1 - label;
  CHECK(training_accuracy(m, train_linear_svm(m, {.C = 1.0})) == 100.0);
}

TEST_CASE("gaussian blobs: within 2 points of the exhaustive linear separator") {
  auto m = blobs(100, {{0.0, 0.0}, {1.5, 1.0}}, 0.8, 1);
  const double oracle = best_linear_separator(m);
  const double svm = training_accuracy(m, train_linear_svm(m, {.C = 1.0, .seed = 1}));
  CHECK(svm <= oracle + 1e-9);
  CHECK(svm >= oracle - 2.0);
}

TEST_CASE("gaussian blobs: never above the separator oracle") {
  // Hinge loss is a surrogate, so the gap to the 0-1 optimum grows with
  // overlap; only the ordering and a loose bound hold across seeds.
  for (double sigma : {0.8, 1.0})
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto m = blobs(100, {{0.0, 0.0}, {1.5, 1.0}}, sigma, seed);
      const double oracle = best_linear_separator(m);
      const double svm = training_accuracy(m, train_linear_svm(m, {.C = 1.0, .seed = seed}));
      CHECK(svm <= oracle + 1e-9);
      CHECK(svm >= oracle - 5.0);
    }
}

TEST_CASE("one-vs-rest on three blobs") {
  auto m = blobs(60, {{0.0, 0.0}, {4.0, 0.0}, {0.0, 4.0}}, 0.5, 9);
  auto model = train_linear_svm(m, {.C = 10.0});
  CHECK(model.num_machines() == 3);
  CHECK(model.weights.size() == 3 * 3);
  CHECK(training_accuracy(m, model) >= 98.0);
}

TEST_CASE("training errors") {
  auto one_class = matrix(1, {0.0, 1.0}, {0, 0});
  CHECK_THROWS_AS(train_linear_svm(one_class, {}), TrainingError);
  auto nan = matrix(1, {0.0, std::nan("")}, {0, 1});
  CHECK_THROWS_AS(train_linear_svm(nan, {}), ValidationError);
  auto ok = matrix(1, {0.0, 1.0}, {0, 1});
  CHECK_THROWS_AS(train_linear_svm(ok, {.C = 0.0}), ValidationError);
}

TEST_CASE("prediction ties go to the lowest class") {
  SVMModel model;
  model.dim = 1;
  model.num_classes = 3;
  model.weights = {0.0, 1.0, 0.0, 1.0, 0.0, 0.5};
  std::vector<double> x{0.0};
  CHECK(model.predict(x) == 0);
  model.num_classes = 2;
  model.weights = {0.0, 0.0};
  CHECK(model.predict(x) == 0);
}

TEST_CASE("training folds: accuracy at least the best constant predictor") {
  auto m = blobs(60, {{0.0, 0.0}, {1.0, 0.5}, {0.0, 1.2}}, 0.7, 13);
  auto folds = stratified_folds(m.labels, 10, 2);
  for (int f = 0; f < 10; ++f) {
    std::vector<std::size_t> train;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (folds[i] != f) train.push_back(i);
    std::vector<std::size_t> counts(3, 0);
    for (std::size_t i : train) ++counts[static_cast<std::size_t>(m.labels[i])];
    const double constant =
        100.0 * static_cast<double>(*std::max_element(counts.begin(), counts.end())) / static_cast<double>(train.size());
    for (double C : default_c_grid()) CHECK(accuracy(train_linear_svm(m, train, {.C = C}), m, train) >= constant - 1e-9);
  }
}

namespace {

// Primal objective of one machine with the bias regularized like any weight.
double machine_objective(const FeatureMatrix& m, std::span<const double> w, int positive, double C) {
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = w[m.dim];
    for (std::size_t f = 0; f < m.dim; ++f) s += w[f] * m.row(i)[f];
    const double y = m.labels[i] == positive ? 1.0 : -1.0;
    loss += std::max(0.0, 1.0 - y * s);
  }
  return 0.5 * reg + C * loss;
}

}  // namespace

TEST_CASE("every machine beats the constant models in its own objective") {
  // The 0-1 version of this can fail at a true hinge optimum: with C=100 on
  // trial 14 the model scores 57.78 against a 60.00 majority rate while its
  // objective is 6981.5 against 7200.5 for the constant.
  std::mt19937_64 rng(5);
  int below_majority = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int classes = 2 + trial % 2;
    FeatureMatrix m = matrix(3, {}, {});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 90; ++i) {
      const int label = static_cast<int>(rng() % 10 < 6 ? 0 : 1 + rng() % static_cast<unsigned>(classes - 1));
      for (int f = 0; f < 3; ++f) m.values.push_back(u(rng) + 0.3 * label * (f == 0));
      m.labels.push_back(label);
    }
    std::vector<std::size_t> counts(static_cast<std::size_t>(classes), 0);
    for (int l : m.labels) ++counts[static_cast<std::size_t>(l)];
    const double constant = 100.0 * static_cast<double>(*std::max_element(counts.begin(), counts.end())) / 90.0;
    for (double C : {0.01, 1.0, 100.0}) {
      auto model = train_linear_svm(m, {.C = C});
      for (std::size_t k = 0; k < model.num_machines(); ++k) {
        const int positive = classes == 2 ? 1 : static_cast<int>(k);
        std::span<const double> w(model.weights.data() + k * 4, 4);
        double best_constant = std::numeric_limits<double>::infinity();
        for (double b : {-1.0, 0.0, 1.0}) {
          std::vector<double> c{0.0, 0.0, 0.0, b};
          best_constant = std::min(best_constant, machine_objective(m, c, positive, C));
        }
        // Slack covers the solver stopping tolerance.
        CHECK(machine_objective(m, w, positive, C) <= best_constant * (1.0 + 1e-4));
      }
      below_majority += training_accuracy(m, model) < constant - 1e-9;
    }
  }
  MESSAGE("models below the majority rate: " << below_majority << " of 60");
  CHECK(below_majority <= 1);
}

TEST_CASE("stratified folds: balanced binary") {
  std::vector<int> labels(1000);
  for (std::size_t i = 0; i < 1000; ++i) labels[i] = i < 500 ? 0 : 1;
  auto folds = stratified_folds(labels, 10, 3);
  for (int f = 0; f < 10; ++f) {
    int c0 = 0, c1 = 0;
    for (std::size_t i = 0; i < 1000; ++i)
      if (folds[i] == f) (labels[i] == 0 ? c0 : c1)++;
    CHECK(c0 == 50);
    CHECK(c1 == 50);
  }
  CHECK(stratified_folds(labels, 10, 3) == folds);
  CHECK(stratified_folds(labels, 10, 4) != folds);
}

TEST_CASE("stratified folds: 21/37") {
  std::vector<int> labels;
  labels.insert(labels.end(), 21, 0);
  labels.insert(labels.end(), 37, 1);
  auto folds = stratified_folds(labels, 10, 0);
  for (int f = 0; f < 10; ++f) {
    int c0 = 0, c1 = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (folds[i] == f) (labels[i] == 0 ? c0 : c1)++;
    CHECK((c0 + c1 == 5 || c0 + c1 == 6));
    CHECK((c0 == 2 || c0 == 3));
    CHECK((c1 == 3 || c1 == 4));
  }
}

TEST_CASE("stratified folds: per-class balance property and errors") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int classes = 2 + static_cast<int>(rng() % 4);
    std::vector<int> labels;
    for (int c = 0; c < classes; ++c) labels.insert(labels.end(), 10 + rng() % 200, c);
    std::shuffle(labels.begin(), labels.end(), rng);
    const int k = 2 + static_cast<int>(rng() % 9);
    auto folds = stratified_folds(labels, k, rng());
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (int f : folds) {
      REQUIRE(f >= 0);
      REQUIRE(f < k);
      ++sizes[static_cast<std::size_t>(f)];
    }
    CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);
    for (int c = 0; c < classes; ++c) {
      const auto total = static_cast<double>(std::count(labels.begin(), labels.end(), c));
      for (int f = 0; f < k; ++f) {
        std::size_t in_fold = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) in_fold += labels[i] == c && folds[i] == f;
        CHECK(std::fabs(static_cast<double>(in_fold) - total / k) < 1.0);
      }
    }
  }
  std::vector<int> small{0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  try {
    stratified_folds(small, 10, 0);
    FAIL("expected stratification error");
  } catch (const StratificationError& e) {
    CHECK(std::string(e.what()).find("class 0") != std::string::npos);
  }
}

TEST_CASE("uninformative features give chance accuracy") {
  auto m = matrix(2, std::vector<double>(2000, 0.25), {});
  for (int i = 0; i < 1000; ++i) m.labels.push_back(i % 2);
  CVOptions opts;
  opts.seed = 1;
  auto report = cross_validate(m, opts);
  CHECK(report.mean == doctest::Approx(50.0));
  CHECK(report.fold_accuracies.size() == 100);
}

TEST_CASE("cross validation report identities and determinism") {
  auto m = blobs(60, {{0.0, 0.0}, {1.0, 0.5}}, 0.7, 21);
  CVOptions opts;
  opts.seed = 42;
  opts.threads = 1;
  auto a = cross_validate(m, opts);
  REQUIRE(a.fold_accuracies.size() == 100);
  auto [mean, sd] = mean_std(a.fold_accuracies);
  CHECK(std::fabs(mean - a.mean) <= 1e-9);
  CHECK(std::fabs(sd - a.std) <= 1e-9);
  for (double x : a.fold_accuracies) {
    CHECK(x >= 0.0);
    CHECK(x <= 100.0);
  }
  CHECK(a.grid.size() == 7);
  for (const auto& g : a.grid) CHECK(g.mean <= a.mean);
  CHECK(a.mean > 65.0);

  opts.threads = 3;
  auto b = cross_validate(m, opts);
  CHECK(b.fold_accuracies == a.fold_accuracies);
  CHECK(b.chosen_C == a.chosen_C);

  std::ostringstream ja, jb;
  write_report_json(ja, a);
  write_report_json(jb, b);
  CHECK(ja.str() == jb.str());
  auto parsed = nlohmann::json::parse(ja.str());
  for (const char* key : {"dataset", "feature_spec", "chosen_C", "mean", "std", "fold_accuracies", "seed"})
    CHECK(parsed.contains(key));
  CHECK(parsed["fold_accuracies"].size() == 100);
}

TEST_CASE("summary line uses two decimals") {
  CVReport r;
  r.mean = 70.3666;
  r.std = 4.114;
  CHECK(summary_line(r) == "70.37±4.11");
}
