#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliquescope/clique_engine.hpp"
#include "cliquescope/error.hpp"
#include "cliquescope/kernels.hpp"
#include "test_support.hpp"

using namespace cliquescope;
using namespace cliquescope::testing;

TEST_CASE("count_cliques on K_5") {
  auto c = count_cliques(complete_graph(5), 6);
  CHECK(c[1] == 5);
  CHECK(c[2] == 10);
  CHECK(c[3] == 10);
  CHECK(c[4] == 5);
  CHECK(c[5] == 1);
  CHECK(c[6] == 0);
}

TEST_CASE("triangle-free graphs") {
  auto c = count_cliques(cycle_graph(5), 4);
  CHECK(c[3] == 0);
  CHECK(c[4] == 0);
  auto p = brute_force_counts(petersen_graph(), 4).first;
  CHECK(p[2] == 15);
  CHECK(p[3] == 0);
  CHECK(p[4] == 0);
  CHECK(count_cliques(petersen_graph(), 4) == p);
}

TEST_CASE("degenerate inputs") {
  CHECK(count_cliques(Graph{}, 3) == CliqueCountVector(3));
  auto empty = count_cliques(Graph::from_edges(10, {}), 5);
  CHECK(empty[1] == 10);
  for (int j = 2; j <= 5; ++j) CHECK(empty[j] == 0);
  auto bf = brute_force_counts(Graph::from_edges(10, {}), 5).first;
  CHECK(bf == empty);
  CHECK_THROWS_AS(count_cliques(complete_graph(3), 2), ArgumentError);
  CHECK_THROWS_AS(count_cliques_per_node(complete_graph(3), 1), ArgumentError);
  CHECK_THROWS_AS(brute_force_counts(complete_graph(3), 2), ArgumentError);
  CHECK_THROWS_AS(brute_force_counts(Graph::from_edges(41, {}), 3), RefusalError);
}

TEST_CASE("brute force on K_6") {
  auto [c, nodes] = brute_force_counts(complete_graph(6), 6);
  for (int j = 1; j <= 6; ++j) CHECK(c[j] == binomial(6, j));
  for (NodeId v = 0; v < 6; ++v) CHECK(nodes.at(v, 3) == binomial(5, 2));
}

TEST_CASE("per-node counts on K_4 and the paw") {
  auto k4 = count_cliques_per_node(complete_graph(4), 4);
  for (NodeId v = 0; v < 4; ++v) {
    CHECK(k4.at(v, 3) == 3);
    CHECK(k4.at(v, 4) == 1);
  }
  auto paw = count_cliques_per_node(paw_graph(), 3);
  CHECK(paw.at(0, 3) == 1);
  CHECK(paw.at(1, 3) == 1);
  CHECK(paw.at(2, 3) == 1);
  CHECK(paw.at(3, 3) == 0);
  CHECK(paw.at(0, 2) == 3);
  CHECK(paw.at(3, 1) == 1);
}

TEST_CASE("pivot engine equals enumeration on G(20, 0.5) and G(18, 0.5)") {
  Graph g20 = random_graph(20, 0.5, 2024);
  auto [bf, bf_nodes] = brute_force_counts(g20, 10);
  CHECK(count_cliques(g20, 10) == bf);

  Graph g18 = random_graph(18, 0.5, 7);
  auto [bf18, bf18_nodes] = brute_force_counts(g18, 10);
  CHECK(count_cliques_per_node(g18, 10) == bf18_nodes);
}

TEST_CASE("oracle equivalence sweep with invariants") {
  for (std::size_t n : {8, 13, 21, 25})
    for (double p : {0.2, 0.5, 0.8})
      for (std::uint64_t seed = 100; seed < 103; ++seed) {
        Graph g = random_graph(n, p, seed * 31 + n);
        auto [bf, bf_nodes] = brute_force_counts(g, 10);
        auto counts = count_cliques(g, 10);
        auto nodes = count_cliques_per_node(g, 10);
        REQUIRE(counts == bf);
        REQUIRE(nodes == bf_nodes);
        CHECK(aggregate(nodes) == counts);

        CHECK(counts[1] == g.num_nodes());
        CHECK(counts[2] == g.num_edges());
        bool zero_seen = false;
        for (int j = 1; j <= 10; ++j) {
          CHECK(counts[j] <= binomial(n, static_cast<std::uint64_t>(j)));
          CHECK(nodes.column_sum(j) == counts[j] * j);
          if (zero_seen) CHECK(counts[j] == 0);
          zero_seen = zero_seen || counts[j] == 0;
        }
        for (NodeId v = 0; v < n; ++v) {
          CHECK(nodes.at(v, 1) == 1);
          CHECK(nodes.at(v, 2) == g.degree(v));
          for (int j = 2; j <= 10; ++j) CHECK(nodes.at(v, j) <= binomial(g.degree(v), static_cast<std::uint64_t>(j - 1)));
        }
      }
}

TEST_CASE("every kmax from 3 to 10 agrees with enumeration") {
  for (int kmax = 3; kmax <= 10; ++kmax) {
    Graph g = random_graph(22, 0.7, 500 + static_cast<std::uint64_t>(kmax));
    auto [bf, bf_nodes] = brute_force_counts(g, kmax);
    CHECK(count_cliques(g, kmax) == bf);
    CHECK(count_cliques_per_node(g, kmax) == bf_nodes);
    auto [counts, weighted] = count_cliques_degree_weighted(g, kmax);
    CHECK(counts == bf);
    for (int j = 1; j <= kmax; ++j) {
      BigInt expect = 0;
      for (NodeId v = 0; v < g.num_nodes(); ++v) expect += bf_nodes.at(v, j) * g.degree(v);
      CHECK(weighted[j] == expect);
    }
  }
}

TEST_CASE("degree-weighted sums agree with per-node counts") {
  for (std::uint64_t seed : {3, 4, 5}) {
    Graph g = random_graph(30, 0.6, seed);
    auto nodes = count_cliques_per_node(g, 12);
    auto [counts, weighted] = count_cliques_degree_weighted(g, 12);
    CHECK(counts == aggregate(nodes));
    for (int j = 1; j <= 12; ++j) {
      BigInt expect = 0;
      for (NodeId v = 0; v < g.num_nodes(); ++v) expect += nodes.at(v, j) * g.degree(v);
      CHECK(weighted[j] == expect);
    }
  }
}

TEST_CASE("counts beyond 128 bits stay exact") {
  // K_200 with kmax 100: binomial(200, 100) ~ 9e58 overflows 128 bits.
  auto c = count_cliques(complete_graph(200), 100);
  BigInt expect = 1;
  for (int i = 1; i <= 100; ++i) expect = expect * (200 - 100 + i) / i;
  CHECK(c[100] == expect);
  CHECK(c[99] == expect * 100 / 101);
  auto nodes = count_cliques_per_node(complete_graph(120), 60);
  BigInt per = 1;  // binomial(119, 59)
  for (int i = 1; i <= 59; ++i) per = per * (119 - 59 + i) / i;
  CHECK(nodes.at(17, 60) == per);
}

TEST_CASE("exact accumulator carries into the big part") {
  ExactAccumulator acc;
  const u128 max = ~u128{0};
  acc.add(max);
  acc.add(max);
  acc.add(u128{2});
  CHECK(acc.value() == (BigInt(1) << 129));
  ExactAccumulator prod;
  prod.add_product(max, 3);
  CHECK(prod.value() == to_big(max) * 3);
}

TEST_CASE("ratio rounds huge operands") {
  BigInt a = BigInt(1) << 2000;
  CHECK(ratio(a, a) == 1.0);
  CHECK(ratio(a * 3, a * 4) == 0.75);
  CHECK(ratio(BigInt(1), BigInt(3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // 2^64 + 1 rounds to 2^64; 2^53 + 1 is not representable either.
  CHECK(ratio((BigInt(1) << 64) + 1, BigInt(1)) == 0x1p64);
  CHECK(ratio((BigInt(1) << 53) + 1, BigInt(1)) == 0x1p53);
  CHECK(ratio((BigInt(1) << 53) + 3, BigInt(1)) == 0x1p53 + 4);
}

TEST_CASE("determinism across threads and SIMD backends") {
  Graph g = random_graph(120, 0.3, 99);
  auto reference = count_cliques_per_node(g, 10, {1});
  for (int threads : {2, 3, 4}) CHECK(count_cliques_per_node(g, 10, {threads}) == reference);
  kernels::select_backend(kernels::Backend::scalar);
  CHECK(count_cliques_per_node(g, 10, {2}) == reference);
  if (kernels::backend_supported(kernels::Backend::avx2)) kernels::select_backend(kernels::Backend::avx2);
}

TEST_CASE("wide local neighborhoods exercise multi-word bitsets") {
  // Dense enough that out-neighborhoods exceed 64 and 256 vertices.
  Graph g = random_graph(400, 0.9, 5);
  auto bf = count_cliques(g, 4, {1});
  std::uint64_t triangles = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    for (NodeId v : g.neighbors(u))
      if (v > u)
        for (NodeId w : g.neighbors(v))
          if (w > v && g.has_edge(u, w)) ++triangles;
  CHECK(bf[3] == triangles);
}
