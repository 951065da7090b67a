#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "safeset/errors.hpp"

namespace safeset {

using Weight = std::int64_t;

// Builders reject instances whose total weight exceeds this, so budget-indexed
// tables and rational cross-multiplications stay inside 64/128-bit arithmetic.
inline constexpr Weight kMaxTotalWeight = 1'000'000'000'000'000LL;

// Sorted set of 1-based vertex ids. Lexicographic order on the member list is
// the tie-break used by every deterministic argmin in the solvers.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);
  VertexSet(std::initializer_list<int> members)
      : VertexSet(std::vector<int>(members)) {}

  static VertexSet full(int n);

  const std::vector<int>& members() const { return members_; }
  bool contains(int v) const;
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  void add(int v);

  // weights is 1-based (size n+1, slot 0 unused).
  Weight weight(const std::vector<Weight>& weights) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<int> members_;
};

// Vertex-weighted tree on vertices 1..n. Immutable once built; build()
// validates connectivity, acyclicity, ids, and non-negative weights.
class WeightedTree {
 public:
  static WeightedTree build(int n, std::vector<std::pair<int, int>> edges,
                            const std::vector<Weight>& weights);

  int n() const { return n_; }
  Weight weight(int v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }  // 1-based
  Weight total_weight() const { return total_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }  // ascending
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  // Same topology, different weights (validated the same way).
  WeightedTree with_weights(const std::vector<Weight>& weights) const;

 private:
  WeightedTree() = default;

  int n_ = 0;
  Weight total_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Weight> weights_;        // 1-based
  std::vector<std::vector<int>> adj_;  // 1-based, sorted
};

// Per-vertex (w-, w+) pair; both maps cover 1..n, no ordering imposed.
class DualWeights {
 public:
  static DualWeights build(const std::vector<Weight>& wminus, const std::vector<Weight>& wplus);
  static DualWeights uniform(const WeightedTree& tree);

  int n() const { return n_; }
  Weight minus(int v) const { return wminus_[v]; }
  Weight plus(int v) const { return wplus_[v]; }
  const std::vector<Weight>& minus_weights() const { return wminus_; }  // 1-based
  const std::vector<Weight>& plus_weights() const { return wplus_; }    // 1-based
  Weight minus_total() const;
  Weight plus_total() const;

 private:
  DualWeights() = default;

  int n_ = 0;
  std::vector<Weight> wminus_;
  std::vector<Weight> wplus_;
};

// Simple undirected graph on vertices 1..n; no loops, no parallel edges.
// Connectivity is not required here (block graph routines check it).
class SimpleGraph {
 public:
  static SimpleGraph build(int n, std::vector<std::pair<int, int>> edges);
  static SimpleGraph from_tree(const WeightedTree& tree);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }  // ascending
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool adjacent(int u, int v) const;
  bool connected() const;

 private:
  SimpleGraph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// A tree rooted at a fixed vertex with children ordered by ascending id and
// per-vertex subtree totals of the supplied weight map. order() is the BFS
// order from the root (parents before children).
class RootedView {
 public:
  RootedView(const WeightedTree& tree, int root);  // uses the tree's own weights
  RootedView(const WeightedTree& tree, int root, const std::vector<Weight>& weights);

  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }  // 0 for the root
  const std::vector<int>& children(int v) const { return children_[v]; }
  Weight subtree_weight(int v) const { return subtree_[v]; }
  const std::vector<int>& order() const { return order_; }

 private:
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<Weight> subtree_;
  std::vector<int> order_;
};

}  // namespace safeset
