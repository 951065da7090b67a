#include "safeset/instances.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

#include "safeset/blockgraph.hpp"

namespace safeset {

WeightedTree random_tree(int n, std::uint64_t seed, Weight w_max, Weight w_min) {
  if (n < 1) throw Error(ErrorKind::BadRange, "random_tree needs n >= 1");
  if (w_min < 0 || w_min > w_max)
    throw Error(ErrorKind::BadRange, "random_tree needs 0 <= w_min <= w_max");
  SplitMix64 rng(seed);

  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.emplace_back(1, 2);
  } else if (n >= 3) {
    // Pruefer decode; the code sequence is uniform, hence so is the tree.
    std::vector<int> code(n - 2);
    for (auto& c : code) c = 1 + static_cast<int>(rng.next_below(n));
    std::vector<int> degree(n + 1, 1);
    for (int c : code) ++degree[c];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 1; v <= n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (int c : code) {
      int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
      if (--degree[c] == 1) leaves.push(c);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }

  std::vector<Weight> weights(n);
  std::uint64_t range = static_cast<std::uint64_t>(w_max - w_min) + 1;
  for (auto& w : weights) w = w_min + static_cast<Weight>(rng.next_below(range));
  return WeightedTree::build(n, std::move(edges), weights);
}

WeightedTree subset_sum_star(const std::vector<Weight>& c, Weight k) {
  if (c.empty()) throw Error(ErrorKind::PreconditionViolated, "need at least one value");
  Weight sum = 0, cmin = c.front(), cmax = c.front();
  for (Weight ci : c) {
    if (ci <= 0) throw Error(ErrorKind::PreconditionViolated, "values must be positive");
    sum += ci;
    cmin = std::min(cmin, ci);
    cmax = std::max(cmax, ci);
  }
  if (!(cmax < k))
    throw Error(ErrorKind::PreconditionViolated,
                "needs max{c_i} < K: max = " + std::to_string(cmax) + ", K = " + std::to_string(k));
  if (!(k < sum))
    throw Error(ErrorKind::PreconditionViolated,
                "needs K < sum c_i: K = " + std::to_string(k) + ", sum = " + std::to_string(sum));
  if (!(2 * cmin >= cmax))
    throw Error(ErrorKind::PreconditionViolated, "needs 2*min{c_i} >= max{c_i}: min = " +
                                                     std::to_string(cmin) +
                                                     ", max = " + std::to_string(cmax));

  int n = static_cast<int>(c.size()) + 2;
  std::vector<std::pair<int, int>> edges;
  std::vector<Weight> weights(n);
  weights[0] = 1;  // center is vertex 1
  for (std::size_t i = 0; i < c.size(); ++i) weights[i + 1] = c[i];
  weights[n - 1] = k + 1;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  WeightedTree star = WeightedTree::build(n, std::move(edges), weights);

  // Restricted instances keep the average weight within 4x of the lightest
  // non-center vertex; guaranteed by the preconditions, checked anyway.
  assert(star.total_weight() <= 4 * cmin * static_cast<Weight>(n));
  return star;
}

SimpleGraph random_block_graph(const std::vector<int>& block_sizes, std::uint64_t seed) {
  if (block_sizes.empty()) throw Error(ErrorKind::BadRange, "need at least one block");
  for (int s : block_sizes)
    if (s < 2) throw Error(ErrorKind::BadRange, "block sizes must be >= 2");
  SplitMix64 rng(seed);

  std::vector<std::pair<int, int>> edges;
  int n = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    std::vector<int> members;
    if (b == 0) {
      for (int i = 0; i < block_sizes[b]; ++i) members.push_back(++n);
    } else {
      members.push_back(1 + static_cast<int>(rng.next_below(n)));  // shared cut vertex
      for (int i = 1; i < block_sizes[b]; ++i) members.push_back(++n);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        edges.emplace_back(members[i], members[j]);
  }
  SimpleGraph g = SimpleGraph::build(n, std::move(edges));
  BlockDecomposition d = block_decomposition(g);  // validates the construction
  assert(d.blocks.size() == block_sizes.size());
  return g;
}

WeightedTree ratio_bounded_weights(const WeightedTree& tree, long long ratio_bound,
                                   std::uint64_t seed, Weight base) {
  if (ratio_bound < 1 || base < 1)
    throw Error(ErrorKind::BadRange, "ratio_bounded_weights needs M >= 1 and base >= 1");
  SplitMix64 rng(seed);
  std::vector<Weight> weights(tree.n());
  std::uint64_t range = static_cast<std::uint64_t>(ratio_bound * base - base) + 1;
  for (auto& w : weights) w = base + static_cast<Weight>(rng.next_below(range));
  return tree.with_weights(weights);
}

}  // namespace safeset
