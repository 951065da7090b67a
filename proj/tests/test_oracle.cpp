#include <set>

#include "doctest.h"
#include "safeset/oracle.hpp"
#include "safeset/verify.hpp"
#include "test_util.hpp"

using namespace safeset;
using testutil::path_t1;
using testutil::star_t2;

TEST_CASE("enumerate_connected_sets on small fixtures") {
  SimpleGraph p2 = SimpleGraph::build(2, {{1, 2}});
  auto sets = enumerate_connected_sets(p2);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0] == VertexSet{});
  CHECK(sets[1] == VertexSet{1});
  CHECK(sets[2] == VertexSet{2});
  CHECK(sets[3] == VertexSet{1, 2});

  SimpleGraph k3 = SimpleGraph::build(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(enumerate_connected_sets(k3).size() == 8);

  SimpleGraph p3 = SimpleGraph::build(3, {{1, 2}, {2, 3}});
  auto p3_sets = enumerate_connected_sets(p3);
  CHECK(p3_sets.size() == 7);
  for (const auto& s : p3_sets) CHECK(s != VertexSet{1, 3});
}

TEST_CASE("enumeration matches a subset filter and has no duplicates") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    SplitMix64 rng(seed * 101);
    WeightedTree t = random_tree(1 + static_cast<int>(rng.next_below(8)), rng.next(), 3);
    SimpleGraph g = SimpleGraph::from_tree(t);
    auto sets = enumerate_connected_sets(g);
    std::set<VertexSet> unique(sets.begin(), sets.end());
    CHECK(unique.size() == sets.size());
    int expected = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << g.n()); ++mask) {
      std::vector<int> members;
      for (int v = 1; v <= g.n(); ++v)
        if (mask & (1ULL << (v - 1))) members.push_back(v);
      if (is_connected_set(g, VertexSet(std::move(members)))) ++expected;
    }
    CHECK(static_cast<int>(sets.size()) == expected);
  }
}

TEST_CASE("enumeration rejects oversized instances") {
  WeightedTree t = random_tree(12, 9, 3);
  CHECK_THROWS_AS((void)enumerate_connected_sets(t, OracleOptions{10}), Error);
}

TEST_CASE("brute_connected_safe_min on fixtures") {
  WeightedTree t1 = path_t1();
  auto sol = brute_connected_safe_min(t1, DualWeights::uniform(t1));
  CHECK(sol.weight == 3);
  CHECK(sol.set == VertexSet{3});

  WeightedTree t2 = star_t2();
  sol = brute_connected_safe_min(t2, DualWeights::uniform(t2));
  CHECK(sol.weight == 6);
  CHECK(sol.set == VertexSet{1, 2, 3});

  WeightedTree zero = WeightedTree::build(4, {{1, 2}, {2, 3}, {3, 4}}, {0, 0, 0, 0});
  sol = brute_connected_safe_min(zero, DualWeights::uniform(zero));
  CHECK(sol.weight == 0);
  CHECK(sol.set == VertexSet{});
}

TEST_CASE("brute_connected_safe_min output is safe and connected") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SplitMix64 rng(seed * 271);
    WeightedTree t = random_tree(1 + static_cast<int>(rng.next_below(9)), rng.next(), 6);
    DualWeights dw = testutil::random_dual(t, rng, 0, 6);
    auto sol = brute_connected_safe_min(t, dw);
    CHECK(is_dual_safe(t, dw, sol.set));
    CHECK(is_connected_set(t, sol.set));
    CHECK(sol.set.weight(dw.minus_weights()) == sol.weight);
  }
}

TEST_CASE("brute_safe_min on fixtures") {
  SimpleGraph p5 = SimpleGraph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  std::vector<Weight> unit(6, 1);
  auto sol = brute_safe_min(p5, unit);
  CHECK(sol.weight == 2);

  SimpleGraph k3 = SimpleGraph::build(3, {{1, 2}, {1, 3}, {2, 3}});
  std::vector<Weight> unit3(4, 1);
  CHECK(brute_safe_min(k3, unit3).weight == 2);

  WeightedTree single = WeightedTree::build(1, {}, {7});
  auto s = brute_safe_min(single);
  CHECK(s.weight == 7);
  CHECK(s.set == VertexSet{1});
}

TEST_CASE("connected safe weight within twice the safe number") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 rng(seed * 443);
    WeightedTree t = random_tree(1 + static_cast<int>(rng.next_below(8)), rng.next(), 6);
    auto cs = brute_connected_safe_min(t, DualWeights::uniform(t));
    auto s = brute_safe_min(t);
    CHECK(cs.weight <= 2 * s.weight);
    CHECK(s.weight <= cs.weight);
  }
}

TEST_CASE("subset_sum_feasible") {
  CHECK(subset_sum_feasible({2, 3, 3}, 5));
  CHECK_FALSE(subset_sum_feasible({2, 3, 3}, 7));
  CHECK_FALSE(subset_sum_feasible({}, 1));
  CHECK(subset_sum_feasible({}, 0));
  CHECK_FALSE(subset_sum_feasible({4, 4}, 9));

  // Cross-check against direct enumeration on random instances.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SplitMix64 rng(seed * 769);
    int k = 1 + static_cast<int>(rng.next_below(8));
    std::vector<Weight> c;
    Weight total = 0;
    for (int i = 0; i < k; ++i) {
      c.push_back(1 + static_cast<Weight>(rng.next_below(12)));
      total += c.back();
    }
    Weight target = static_cast<Weight>(rng.next_below(total + 2));
    bool expect = false;
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      Weight sum = 0;
      for (int i = 0; i < k; ++i)
        if (mask & (1ULL << i)) sum += c[i];
      if (sum == target) expect = true;
    }
    CHECK(subset_sum_feasible(c, target) == expect);
  }
}
