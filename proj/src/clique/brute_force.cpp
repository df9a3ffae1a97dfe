#include <string>

#include "cliquescope/clique_engine.hpp"
#include "cliquescope/error.hpp"

namespace cliquescope {
namespace {

// Plain enumeration: every clique is listed exactly once in increasing id
// order and each member is credited.
class Enumerator {
 public:
  Enumerator(const Graph& g, int kmax)
      : g_(g), kmax_(kmax), global_(static_cast<std::size_t>(kmax), 0),
        node_(g.num_nodes() * static_cast<std::size_t>(kmax), 0) {}

  void run() {
    for (NodeId v = 0; v < g_.num_nodes(); ++v) {
      clique_.assign(1, v);
      extend();
    }
  }

  std::pair<CliqueCountVector, NodeCliqueCounts> result() const {
    std::vector<BigInt> global(global_.begin(), global_.end());
    NodeCliqueCounts nodes(g_.num_nodes(), kmax_);
    for (NodeId v = 0; v < g_.num_nodes(); ++v)
      for (int j = 1; j <= kmax_; ++j) nodes.at(v, j) = node_[v * static_cast<std::size_t>(kmax_) + static_cast<std::size_t>(j - 1)];
    return {CliqueCountVector(std::move(global)), std::move(nodes)};
  }

 private:
  void extend() {
    const std::size_t j = clique_.size();
    ++global_[j - 1];
    for (NodeId v : clique_) ++node_[v * static_cast<std::size_t>(kmax_) + j - 1];
    if (static_cast<int>(j) == kmax_) return;
    for (NodeId w = clique_.back() + 1; w < g_.num_nodes(); ++w) {
      bool adjacent_to_all = true;
      for (NodeId v : clique_) {
        if (!g_.has_edge(v, w)) {
          adjacent_to_all = false;
          break;
        }
      }
      if (!adjacent_to_all) continue;
      clique_.push_back(w);
      extend();
      clique_.pop_back();
    }
  }

  const Graph& g_;
  int kmax_;
  std::vector<std::uint64_t> global_;
  std::vector<std::uint64_t> node_;
  std::vector<NodeId> clique_;
};

}  // namespace

std::pair<CliqueCountVector, NodeCliqueCounts> brute_force_counts(const Graph& g, int kmax) {
  if (kmax < 3) throw ArgumentError("kmax must be at least 3, got " + std::to_string(kmax));
  if (g.num_nodes() > kBruteForceMaxNodes)
    throw RefusalError("brute-force oracle refuses graphs with more than " + std::to_string(kBruteForceMaxNodes) +
                       " nodes (got " + std::to_string(g.num_nodes()) + ")");
  Enumerator e(g, kmax);
  e.run();
  return e.result();
}

}  // namespace cliquescope
