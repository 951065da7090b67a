#include <set>

#include "doctest.h"
#include "safeset/blockgraph.hpp"
#include "safeset/exact_dp.hpp"
#include "safeset/instances.hpp"
#include "safeset/oracle.hpp"
#include "test_util.hpp"

using namespace safeset;

TEST_CASE("random_tree basics and determinism") {
  WeightedTree one = random_tree(1, 7, 5);
  CHECK(one.n() == 1);

  WeightedTree a = random_tree(9, 42, 6);
  WeightedTree b = random_tree(9, 42, 6);
  CHECK(a.edges() == b.edges());
  CHECK(a.weights() == b.weights());
  WeightedTree c = random_tree(9, 43, 6);
  CHECK((a.edges() != c.edges() || a.weights() != c.weights()));

  WeightedTree constant = random_tree(6, 5, 4, 4);
  for (int v = 1; v <= 6; ++v) CHECK(constant.weight(v) == 4);

  CHECK_THROWS_AS((void)random_tree(0, 1, 3), Error);
  CHECK_THROWS_AS((void)random_tree(3, 1, 2, 5), Error);
}

TEST_CASE("random_tree golden fixture n=5 seed=42") {
  WeightedTree t = random_tree(5, 42, 6);
  CHECK(t.edges() == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 4}, {4, 5}});
  CHECK(t.weights() == std::vector<Weight>{0, 2, 6, 4, 2, 6});
}

TEST_CASE("random trees cover different shapes") {
  std::set<std::vector<std::pair<int, int>>> shapes;
  for (std::uint64_t seed = 0; seed < 40; ++seed) shapes.insert(random_tree(6, seed, 1).edges());
  CHECK(shapes.size() >= 10);
}

TEST_CASE("subset_sum_star construction and validation") {
  WeightedTree star = subset_sum_star({2, 3, 3}, 5);
  CHECK(star.n() == 5);
  CHECK(star.weight(1) == 1);
  CHECK(star.weight(2) == 2);
  CHECK(star.weight(3) == 3);
  CHECK(star.weight(4) == 3);
  CHECK(star.weight(5) == 6);
  for (int leaf = 2; leaf <= 5; ++leaf) CHECK(star.neighbors(leaf) == std::vector<int>{1});

  CHECK_THROWS_AS((void)subset_sum_star({2, 3, 3}, 9), Error);  // K >= sum
  CHECK_THROWS_AS((void)subset_sum_star({1, 5}, 4), Error);     // 2*min < max
  CHECK_THROWS_AS((void)subset_sum_star({2, 3, 3}, 3), Error);  // K <= max
}

TEST_CASE("subset-sum stars tie cs to feasibility") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SplitMix64 rng(seed * 859);
    int count = 3 + static_cast<int>(rng.next_below(6));
    Weight base = 2 + static_cast<Weight>(rng.next_below(12));
    std::vector<Weight> c;
    Weight sum = 0, cmax = 0;
    for (int i = 0; i < count; ++i) {
      c.push_back(base + static_cast<Weight>(rng.next_below(base + 1)));  // in [base, 2*base]
      sum += c.back();
      cmax = std::max(cmax, c.back());
    }
    Weight k = cmax + 1 + static_cast<Weight>(rng.next_below(sum - cmax - 1));
    WeightedTree star = subset_sum_star(c, k);
    auto oracle = brute_connected_safe_min(star, DualWeights::uniform(star));
    CHECK((oracle.weight == k + 1 || oracle.weight == k + 2));
    CHECK((oracle.weight == k + 1) == subset_sum_feasible(c, k));
    CHECK(oracle.set.contains(1));  // every connected safe set holds the center
    auto dp = solve_exact(star, DualWeights::uniform(star), k + 2);
    REQUIRE(dp.has_value());
    CHECK(dp->weight == oracle.weight);
    CHECK(dp->set.contains(1));
  }
}

TEST_CASE("random_block_graph shapes") {
  SimpleGraph k3 = random_block_graph({3}, 1);
  CHECK(k3.n() == 3);
  CHECK(k3.m() == 3);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SimpleGraph g = random_block_graph({2, 2, 2}, seed);
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);  // three K2 blocks form a tree
    BlockDecomposition d = block_decomposition(g);
    CHECK(d.blocks.size() == 3);
  }

  SimpleGraph k5p = random_block_graph({5, 2}, 3);
  CHECK(k5p.n() == 6);
  BlockDecomposition d = block_decomposition(k5p);
  CHECK(d.omega == 5);

  CHECK_THROWS_AS((void)random_block_graph({1, 3}, 1), Error);
  CHECK_THROWS_AS((void)random_block_graph({}, 1), Error);
}

TEST_CASE("random_block_graph is deterministic per seed") {
  SimpleGraph a = random_block_graph({4, 3, 2}, 99);
  SimpleGraph b = random_block_graph({4, 3, 2}, 99);
  CHECK(a.edges() == b.edges());
}

TEST_CASE("ratio_bounded_weights ranges") {
  WeightedTree base = random_tree(8, 11, 3);
  WeightedTree flat = ratio_bounded_weights(base, 1, 5, 4);
  for (int v = 1; v <= 8; ++v) CHECK(flat.weight(v) == 4);

  WeightedTree spread = ratio_bounded_weights(base, 3, 5, 4);
  Weight lo = spread.weight(1), hi = spread.weight(1);
  for (int v = 1; v <= 8; ++v) {
    lo = std::min(lo, spread.weight(v));
    hi = std::max(hi, spread.weight(v));
    CHECK(spread.weight(v) >= 4);
    CHECK(spread.weight(v) <= 12);
  }
  CHECK(hi <= 3 * lo);

  CHECK_THROWS_AS((void)ratio_bounded_weights(base, 0, 5, 4), Error);
}

TEST_CASE("ratio_bounded_weights golden fixture M=2 base=1 seed=7") {
  WeightedTree base = random_tree(5, 42, 6);
  WeightedTree w = ratio_bounded_weights(base, 2, 7, 1);
  CHECK(w.edges() == base.edges());
  CHECK(w.weights() == std::vector<Weight>{0, 2, 1, 1, 2, 1});
}
