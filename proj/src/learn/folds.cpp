#include <algorithm>
#include <map>
#include <string>

#include "cliquescope/error.hpp"
#include "cliquescope/learn/cross_validate.hpp"
#include "rng.hpp"

namespace cliquescope::learn {

std::vector<int> stratified_folds(std::span<const int> labels, int n_folds, std::uint64_t seed) {
  if (n_folds < 2) throw ArgumentError("need at least two folds");
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);
  for (const auto& [label, idx] : members)
    if (idx.size() < static_cast<std::size_t>(n_folds))
      throw StratificationError("class " + std::to_string(label) + " has " + std::to_string(idx.size()) +
                                " samples, fewer than " + std::to_string(n_folds) + " folds");

  detail::Rng rng(seed);
  std::vector<int> fold(labels.size(), 0);
  std::size_t deal = 0;
  for (auto& [label, idx] : members) {
    rng.shuffle(std::span<std::size_t>(idx));
    for (std::size_t i : idx) fold[i] = static_cast<int>(deal++ % static_cast<std::size_t>(n_folds));
  }
  return fold;
}

}  // namespace cliquescope::learn
