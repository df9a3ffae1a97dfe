#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "cliquescope/learn/cross_validate.hpp"

namespace cliquescope::learn {

void write_report_json(std::ostream& out, const CVReport& report) {
  nlohmann::ordered_json j;
  j["dataset"] = report.dataset;
  j["feature_spec"] = report.feature_spec;
  j["chosen_C"] = report.chosen_C;
  j["mean"] = report.mean;
  j["std"] = report.std;
  j["fold_accuracies"] = report.fold_accuracies;
  j["seed"] = report.seed;
  j["repeats"] = report.repeats;
  j["n_folds"] = report.n_folds;
  auto& grid = j["grid"] = nlohmann::ordered_json::array();
  for (const auto& g : report.grid) grid.push_back({{"C", g.C}, {"mean", g.mean}, {"std", g.std}});
  out << j.dump(2) << '\n';
}

std::string summary_line(const CVReport& report) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f±%.2f", report.mean, report.std);
  return buf;
}

}  // namespace cliquescope::learn
