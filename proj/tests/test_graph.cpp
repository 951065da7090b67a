#include <algorithm>

#include "doctest.h"
#include "safeset/graph.hpp"
#include "safeset/instances.hpp"
#include "safeset/oracle.hpp"
#include "safeset/verify.hpp"
#include "test_util.hpp"

using namespace safeset;
using testutil::path_t1;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::BadRange;
}

}  // namespace

TEST_CASE("build_tree accepts valid instances") {
  WeightedTree one = WeightedTree::build(1, {}, {5});
  CHECK(one.n() == 1);
  CHECK(one.weight(1) == 5);
  CHECK(one.total_weight() == 5);

  WeightedTree t1 = path_t1();
  CHECK(t1.n() == 5);
  CHECK(t1.total_weight() == 9);
  CHECK(t1.neighbors(3) == std::vector<int>{2, 4});
}

TEST_CASE("build_tree rejects invalid instances") {
  CHECK(kind_of([] { WeightedTree::build(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 1, 1}); }) ==
        ErrorKind::Cyclic);
  CHECK(kind_of([] { WeightedTree::build(4, {{1, 2}, {3, 4}, {1, 2}}, {1, 1, 1, 1}); }) ==
        ErrorKind::Cyclic);
  CHECK(kind_of([] { WeightedTree::build(4, {{1, 2}, {3, 4}}, {1, 1, 1, 1}); }) ==
        ErrorKind::Disconnected);
  CHECK(kind_of([] { WeightedTree::build(2, {{1, 3}}, {1, 1}); }) == ErrorKind::BadVertexId);
  CHECK(kind_of([] { WeightedTree::build(2, {{1, 2}}, {1, -1}); }) == ErrorKind::NegativeWeight);
  CHECK(kind_of([] { WeightedTree::build(2, {{1, 2}}, {1}); }) == ErrorKind::BadRange);
}

TEST_CASE("components_of_complement on the path fixture") {
  WeightedTree t1 = path_t1();
  auto comps = components_of_complement(t1, VertexSet{3});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{1, 2});
  CHECK(comps[1] == VertexSet{4, 5});

  comps = components_of_complement(t1, VertexSet{});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == VertexSet::full(5));

  CHECK(components_of_complement(t1, VertexSet::full(5)).empty());
  CHECK_THROWS_AS((void)components_of_complement(t1, VertexSet{9}), Error);
}

TEST_CASE("is_connected_set") {
  WeightedTree t1 = path_t1();
  CHECK(is_connected_set(t1, VertexSet{1, 2, 3}));
  CHECK_FALSE(is_connected_set(t1, VertexSet{1, 3}));
  CHECK(is_connected_set(t1, VertexSet{}));
}

TEST_CASE("is_dual_safe on the path fixture") {
  WeightedTree t1 = path_t1();
  DualWeights dw = DualWeights::uniform(t1);
  CHECK(is_dual_safe(t1, dw, VertexSet{3}));
  CHECK_FALSE(is_dual_safe(t1, dw, VertexSet{1}));
  CHECK(is_dual_safe(t1, dw, VertexSet::full(5)));

  auto violation = find_safety_violation(t1, dw, VertexSet{1});
  REQUIRE(violation.has_value());
  CHECK(violation->inside == VertexSet{1});
  CHECK(violation->outside == VertexSet{2, 3, 4, 5});
  CHECK(violation->inside_weight == 2);
  CHECK(violation->outside_weight == 7);
}

TEST_CASE("empty set safety follows the zero-total convention") {
  WeightedTree zero = WeightedTree::build(3, {{1, 2}, {2, 3}}, {0, 0, 0});
  CHECK(is_dual_safe(zero, DualWeights::uniform(zero), VertexSet{}));
  WeightedTree t1 = path_t1();
  CHECK_FALSE(is_dual_safe(t1, DualWeights::uniform(t1), VertexSet{}));
}

TEST_CASE("complement components partition the complement and are non-adjacent") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 rng(seed * 977);
    WeightedTree t = random_tree(1 + static_cast<int>(rng.next_below(9)), rng.next(), 6);
    SimpleGraph g = SimpleGraph::from_tree(t);
    std::vector<int> members;
    for (int v = 1; v <= t.n(); ++v)
      if (rng.next_below(2)) members.push_back(v);
    VertexSet s(std::move(members));
    auto comps = components_of_complement(t, s);
    std::vector<char> covered(t.n() + 1, 0);
    for (int v : s) covered[v] = 1;
    for (const auto& comp : comps) {
      for (int v : comp) {
        CHECK_FALSE(covered[v]);
        covered[v] = 1;
      }
    }
    for (int v = 1; v <= t.n(); ++v) CHECK(covered[v]);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        for (int u : comps[i])
          for (int v : comps[j]) CHECK_FALSE(g.adjacent(u, v));
  }
}

TEST_CASE("the full vertex set is always dual-safe") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed * 31);
    WeightedTree t = random_tree(1 + static_cast<int>(rng.next_below(9)), rng.next(), 7);
    DualWeights dw = testutil::random_dual(t, rng, 0, 7);
    CHECK(is_dual_safe(t, dw, VertexSet::full(t.n())));
  }
}

// Supersets of a connected safe set that stay connected remain safe (outside
// components only shrink). The wrong shortcut is assuming the same for
// supersets that break connectivity; the stored counterexample guards it.
TEST_CASE("safety monotonicity holds under connectivity and fails without it") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SplitMix64 rng(seed * 613);
    WeightedTree t = random_tree(2 + static_cast<int>(rng.next_below(7)), rng.next(), 5);
    DualWeights dw = DualWeights::uniform(t);
    for (const auto& s : enumerate_connected_sets(t)) {
      if (!is_dual_safe(t, dw, s)) continue;
      VertexSet grown = s;
      for (int v = 1; v <= t.n() && grown.size() < t.n(); ++v) {
        VertexSet next = grown;
        next.add(v);
        if (!is_connected_set(t, next)) continue;
        grown = next;
        CHECK(is_dual_safe(t, dw, grown));
      }
    }
  }

  // Disconnected-superset counterexample, found by the brute-force oracle.
  WeightedTree path = WeightedTree::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {1, 9, 9, 5, 1});
  DualWeights dw = DualWeights::uniform(path);
  VertexSet safe_set{2, 3};
  VertexSet superset{2, 3, 5};
  CHECK(is_dual_safe(path, dw, safe_set));
  CHECK(is_connected_set(path, safe_set));
  CHECK_FALSE(is_connected_set(path, superset));
  CHECK_FALSE(is_dual_safe(path, dw, superset));
}

TEST_CASE("vertex set ordering is weight-independent and lexicographic") {
  CHECK(VertexSet{1, 3} < VertexSet{1, 3, 4});
  CHECK(VertexSet{1, 2} < VertexSet{1, 3});
  CHECK(VertexSet(std::vector<int>{3, 1, 3}) == VertexSet{1, 3});
}
