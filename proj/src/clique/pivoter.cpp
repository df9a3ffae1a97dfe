#include <omp.h>

#include <algorithm>
#include <bit>
#include <string>

#include "binomial.hpp"
#include "cliquescope/clique_engine.hpp"
#include "cliquescope/error.hpp"
#include "cliquescope/kernels.hpp"

namespace cliquescope {
namespace {

enum class Mode { global, per_node, degree_weighted };

void check_kmax(int kmax) {
  if (kmax < 3) throw ArgumentError("kmax must be at least 3, got " + std::to_string(kmax));
}

// Out-neighborhoods under the degeneracy order, each sorted by node id.
struct OrientedGraph {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;
  std::size_t max_out_degree = 0;

  std::span<const NodeId> out(NodeId v) const { return {targets.data() + offsets[v], targets.data() + offsets[v + 1]}; }
};

OrientedGraph orient(const Graph& g) {
  const std::size_t n = g.num_nodes();
  DegeneracyOrder dg = degeneracy_order(g);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[dg.order[i]] = i;

  OrientedGraph og;
  og.offsets.assign(n + 1, 0);
  og.targets.reserve(g.num_edges());
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v))
      if (position[u] > position[v]) og.targets.push_back(u);
    og.offsets[v + 1] = og.targets.size();
    og.max_out_degree = std::max(og.max_out_degree, og.offsets[v + 1] - og.offsets[v]);
  }
  return og;
}

// Per-thread accumulation of leaf contributions.
class LeafSink {
 public:
  LeafSink(const Graph& g, const detail::BinomialTable& binom, int kmax, Mode mode)
      : g_(g), binom_(binom), kmax_(kmax), mode_(mode), global_(static_cast<std::size_t>(kmax)) {
    if (mode == Mode::per_node) node_.resize(g.num_nodes() * static_cast<std::size_t>(kmax));
    if (mode == Mode::degree_weighted) weighted_.resize(static_cast<std::size_t>(kmax));
  }

  // A leaf with hold set H and pivot set Q accounts for every clique H + S,
  // S a subset of Q: binomial(p, j-h) cliques of order j. A hold vertex lies in
  // all of them, a pivot vertex in binomial(p-1, j-h-1).
  //
  // `singletons` cuts the tree one level early: each of its vertices may join
  // such a clique alone (used when only one more vertex fits under kmax), so
  // order j gains |singletons| * binomial(p, j-h-1) cliques.
  void leaf(std::span<const NodeId> holds, std::span<const NodeId> pivots, std::span<const NodeId> singletons = {}) {
    const int h = static_cast<int>(holds.size());
    const std::size_t p = pivots.size();
    const std::uint64_t s = singletons.size();
    const int top = std::min<int>(kmax_, h + static_cast<int>(p) + (s > 0 ? 1 : 0));
    for (int j = h; j <= top; ++j) {
      binom_.add_to(global_[j - 1], p, j - h);
      binom_.add_product_to(global_[j - 1], p, j - h - 1, s);
    }

    if (mode_ == Mode::per_node) {
      for (NodeId v : holds)
        for (int j = h; j <= top; ++j) {
          binom_.add_to(node_[slot(v, j)], p, j - h);
          binom_.add_product_to(node_[slot(v, j)], p, j - h - 1, s);
        }
      if (p > 0)
        for (NodeId u : pivots)
          for (int j = h + 1; j <= top; ++j) {
            binom_.add_to(node_[slot(u, j)], p - 1, j - h - 1);
            binom_.add_product_to(node_[slot(u, j)], p - 1, j - h - 2, s);
          }
      for (NodeId w : singletons)
        for (int j = h + 1; j <= top; ++j) binom_.add_to(node_[slot(w, j)], p, j - h - 1);
    } else if (mode_ == Mode::degree_weighted) {
      std::uint64_t hold_degree = 0, pivot_degree = 0, single_degree = 0;
      for (NodeId v : holds) hold_degree += g_.degree(v);
      for (NodeId u : pivots) pivot_degree += g_.degree(u);
      for (NodeId w : singletons) single_degree += g_.degree(w);
      for (int j = h; j <= top; ++j) {
        auto& acc = weighted_[j - 1];
        binom_.add_product_to(acc, p, j - h, hold_degree);
        add_product_to(acc, p, j - h - 1, hold_degree, s);
        if (p > 0) {
          binom_.add_product_to(acc, p - 1, j - h - 1, pivot_degree);
          add_product_to(acc, p - 1, j - h - 2, pivot_degree, s);
        }
        binom_.add_product_to(acc, p, j - h - 1, single_degree);
      }
    }
  }

  void merge(const LeafSink& other) {
    for (std::size_t i = 0; i < global_.size(); ++i) global_[i].merge(other.global_[i]);
    for (std::size_t i = 0; i < node_.size(); ++i) node_[i].merge(other.node_[i]);
    for (std::size_t i = 0; i < weighted_.size(); ++i) weighted_[i].merge(other.weighted_[i]);
  }

  CliqueCountVector global_counts() const {
    std::vector<BigInt> out;
    for (const auto& acc : global_) out.push_back(acc.value());
    return CliqueCountVector(std::move(out));
  }

  NodeCliqueCounts node_counts() const {
    NodeCliqueCounts out(g_.num_nodes(), kmax_);
    for (NodeId v = 0; v < g_.num_nodes(); ++v)
      for (int j = 1; j <= kmax_; ++j) out.at(v, j) = node_[slot(v, j)].value();
    return out;
  }

  DegreeWeightedCounts weighted_counts() const {
    std::vector<BigInt> out;
    for (const auto& acc : weighted_) out.push_back(acc.value());
    return DegreeWeightedCounts(std::move(out));
  }

 private:
  std::size_t slot(NodeId v, int j) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(kmax_) + static_cast<std::size_t>(j - 1); }

  // acc += binomial(n, r) * a * b
  void add_product_to(ExactAccumulator& acc, std::size_t n, int r, std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return;
    u128 ab = static_cast<u128>(a) * b;
    if (ab >> 64)
      acc.add(binom_.value(n, r) * to_big(ab));
    else
      binom_.add_product_to(acc, n, r, static_cast<std::uint64_t>(ab));
  }

  const Graph& g_;
  const detail::BinomialTable& binom_;
  int kmax_;
  Mode mode_;
  std::vector<ExactAccumulator> global_;
  std::vector<ExactAccumulator> node_;
  std::vector<ExactAccumulator> weighted_;
};

// Walks the clique tree of one root at a time. The out-neighborhood of the
// root becomes a local bitset graph; candidate sets are bitsets over it.
class RootSolver {
 public:
  RootSolver(const Graph& g, const OrientedGraph& og, int kmax)
      : og_(og), kmax_(kmax), local_index_(g.num_nodes(), -1) {}

  void solve(NodeId root, LeafSink& sink) {
    sink_ = &sink;
    holds_.assign(1, root);
    pivots_.clear();

    auto out = og_.out(root);
    const std::size_t s = out.size();
    if (s <= 1) {
      // Isolated in the oriented graph, or a single out-neighbor: one leaf.
      pivots_.assign(out.begin(), out.end());
      sink.leaf(holds_, pivots_);
      return;
    }

    local_nodes_.assign(out.begin(), out.end());
    for (std::size_t i = 0; i < s; ++i) local_index_[local_nodes_[i]] = static_cast<int>(i);
    words_ = (s + 63) / 64;
    adjacency_.assign(s * words_, 0);
    for (std::size_t a = 0; a < s; ++a) {
      for (NodeId w : og_.out(local_nodes_[a])) {
        int b = local_index_[w];
        if (b < 0) continue;
        set_bit(row(a), static_cast<std::size_t>(b));
        set_bit(row(static_cast<std::size_t>(b)), a);
      }
    }
    for (NodeId v : local_nodes_) local_index_[v] = -1;

    // Level d owns a candidate set and a branch set; depth is at most s + 1.
    levels_.assign((s + 2) * 2 * words_, 0);
    std::uint64_t* candidates = level(0, 0);
    for (std::size_t i = 0; i < s; ++i) set_bit(candidates, i);
    recurse(0);
  }

 private:
  std::uint64_t* row(std::size_t a) { return adjacency_.data() + a * words_; }
  std::uint64_t* level(std::size_t depth, std::size_t which) { return levels_.data() + (depth * 2 + which) * words_; }
  static void set_bit(std::uint64_t* bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void clear_bit(std::uint64_t* bits, std::size_t i) { bits[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  template <typename Fn>
  void for_each_bit(const std::uint64_t* bits, Fn&& fn) {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  // Candidate set at `depth` is non-empty on entry.
  void recurse(std::size_t depth) {
    const auto& k = kernels::active();
    std::uint64_t* candidates = level(depth, 0);
    if (static_cast<int>(holds_.size()) == kmax_) {
      // Larger cliques below this node exceed kmax; the only one left to
      // count is the hold set itself.
      sink_->leaf(holds_, pivots_);
      return;
    }

    if (static_cast<int>(holds_.size()) + 1 == kmax_) {
      // At most one more vertex fits: every candidate is a singleton.
      const std::size_t mark = singletons_.size();
      for_each_bit(candidates, [&](std::size_t u) { singletons_.push_back(local_nodes_[u]); });
      sink_->leaf(holds_, pivots_, std::span<const NodeId>(singletons_.data() + mark, singletons_.size() - mark));
      singletons_.resize(mark);
      return;
    }

    const std::size_t size = k.and_popcount(candidates, candidates, words_);
    std::size_t pivot = 0;
    std::size_t best = 0;
    std::size_t fewest = size;
    bool first = true;
    for_each_bit(candidates, [&](std::size_t u) {
      std::size_t c = k.and_popcount(row(u), candidates, words_);
      fewest = std::min(fewest, c);
      if (first || c > best) {
        pivot = u;
        best = c;
        first = false;
      }
    });

    if (fewest + 1 == size) {
      // Candidates form a clique: pivot-only descent ends in a single leaf.
      const std::size_t mark = pivots_.size();
      for_each_bit(candidates, [&](std::size_t u) { pivots_.push_back(local_nodes_[u]); });
      sink_->leaf(holds_, pivots_);
      pivots_.resize(mark);
      return;
    }

    std::uint64_t* branch = level(depth, 1);
    k.andnot_into(branch, candidates, row(pivot), words_);
    std::uint64_t* child = level(depth + 1, 0);
    for_each_bit(branch, [&](std::size_t v) {
      const bool nonempty = k.and_into(child, candidates, row(v), words_);
      auto& stack = (v == pivot) ? pivots_ : holds_;
      stack.push_back(local_nodes_[v]);
      if (nonempty)
        recurse(depth + 1);
      else
        sink_->leaf(holds_, pivots_);
      stack.pop_back();
      clear_bit(candidates, v);
    });
  }

  const OrientedGraph& og_;
  int kmax_;
  LeafSink* sink_ = nullptr;
  std::vector<int> local_index_;
  std::vector<NodeId> local_nodes_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint64_t> levels_;
  std::vector<NodeId> holds_;
  std::vector<NodeId> pivots_;
  std::vector<NodeId> singletons_;
};

LeafSink run(const Graph& g, int kmax, Mode mode, const CountOptions& options) {
  check_kmax(kmax);
  const OrientedGraph og = orient(g);
  const detail::BinomialTable binom(og.max_out_degree + 1, kmax);
  LeafSink total(g, binom, kmax, mode);

  const auto n = static_cast<std::int64_t>(g.num_nodes());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads) if (n > 64)
  {
    LeafSink local(g, binom, kmax, mode);
    RootSolver solver(g, og, kmax);
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t v = 0; v < n; ++v) solver.solve(static_cast<NodeId>(v), local);
#pragma omp critical(cliquescope_merge)
    total.merge(local);
  }
  return total;
}

}  // namespace

CliqueCountVector count_cliques(const Graph& g, int kmax, const CountOptions& options) {
  return run(g, kmax, Mode::global, options).global_counts();
}

NodeCliqueCounts count_cliques_per_node(const Graph& g, int kmax, const CountOptions& options) {
  return run(g, kmax, Mode::per_node, options).node_counts();
}

std::pair<CliqueCountVector, DegreeWeightedCounts> count_cliques_degree_weighted(const Graph& g, int kmax,
                                                                                 const CountOptions& options) {
  LeafSink sink = run(g, kmax, Mode::degree_weighted, options);
  return {sink.global_counts(), sink.weighted_counts()};
}

BigInt NodeCliqueCounts::column_sum(int j) const {
  BigInt sum = 0;
  for (NodeId v = 0; v < num_nodes_; ++v) sum += at(v, j);
  return sum;
}

CliqueCountVector aggregate(const NodeCliqueCounts& node_counts) {
  std::vector<BigInt> out;
  for (int j = 1; j <= node_counts.kmax(); ++j) out.push_back(node_counts.column_sum(j) / j);
  return CliqueCountVector(std::move(out));
}

}  // namespace cliquescope
