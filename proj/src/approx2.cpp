#include "safeset/approx2.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "safeset/verify.hpp"

namespace safeset {

namespace {

void bump(ApproxCounters* c, std::uint64_t n = 1) {
  if (c) c->ops += n;
}

// Grows `set` breadth-first (layers from the current set, ascending ids inside
// a layer) until its weight reaches `target`.
void grow_to_weight(const WeightedTree& tree, VertexSet& set, Weight target,
                    ApproxCounters* counters) {
  Weight have = set.weight(tree.weights());
  if (have >= target) return;
  std::vector<char> in(tree.n() + 1, 0);
  for (int v : set) in[v] = 1;
  std::vector<int> frontier(set.members());
  while (have < target) {
    assert(!frontier.empty());  // target never exceeds w(T)
    std::vector<int> layer;
    for (int v : frontier)
      for (int u : tree.neighbors(v))
        if (!in[u]) {
          in[u] = 1;
          layer.push_back(u);
        }
    std::sort(layer.begin(), layer.end());
    for (int v : layer) {
      if (have >= target) break;
      set.add(v);
      have += tree.weight(v);
      bump(counters);
    }
    frontier = std::move(layer);
  }
}

}  // namespace

SubtreeOrder subtree_weight_order(const WeightedTree& tree, int root, ApproxCounters* counters) {
  RootedView rooted(tree, root);
  int n = tree.n();
  SubtreeOrder result;
  result.root = root;
  result.c.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) result.c[v] = rooted.subtree_weight(v);

  // Pick the heaviest available vertex each step (ties by ascending id); a
  // child never outweighs its parent, so the c-sequence is non-increasing and
  // every prefix stays connected.
  auto cmp = [&](int a, int b) {
    if (result.c[a] != result.c[b]) return result.c[a] < result.c[b];
    return a > b;
  };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> frontier(cmp);
  frontier.push(root);
  result.order.reserve(n);
  while (!frontier.empty()) {
    int v = frontier.top();
    frontier.pop();
    result.order.push_back(v);
    bump(counters);
    for (int u : rooted.children(v)) frontier.push(u);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (result.c[result.order[i]] > result.c[result.order[i + 1]])
      result.break_indices.push_back(i + 1);  // 1-based position
  return result;
}

NiceCertificate smallest_r_nice(const WeightedTree& tree, int root, ApproxCounters* counters) {
  if (tree.total_weight() <= 0)
    throw Error(ErrorKind::BadRange, "smallest_r_nice needs w(T) > 0");
  SubtreeOrder ord = subtree_weight_order(tree, root, counters);
  int n = tree.n();
  Weight wmax = 0;
  for (int v = 1; v <= n; ++v) wmax = std::max(wmax, tree.weight(v));

  std::vector<Weight> prefix(n + 1, 0);
  for (int i = 1; i <= n; ++i) prefix[i] = prefix[i - 1] + tree.weight(ord.order[i - 1]);

  // Candidate prefix end positions i_j: the sentinel i_0 = 1, every break, and
  // i_{k+1} = n. c(u(n+1)) reads as -infinity.
  std::vector<int> stops;
  stops.push_back(1);
  for (int b : ord.break_indices) stops.push_back(b);
  stops.push_back(n);

  Weight best = 0;
  int best_stop = -1;
  bool have = false;
  for (int idx : stops) {
    bump(counters);
    Weight tail = prefix[idx] - wmax;  // may be negative; c-term keeps max >= 0
    Weight value;
    if (idx + 1 <= n)
      value = std::max(ord.c[ord.order[idx]], tail);
    else
      value = tail;  // max{-inf, tail}; tail = w(T) - wmax >= 0 here
    if (!have || value < best) {
      have = true;
      best = value;
      best_stop = idx;
    }
  }
  assert(have && best >= 0);

  NiceCertificate cert;
  cert.W = best;
  cert.root = root;
  cert.order = ord.order;
  cert.break_indices = ord.break_indices;
  cert.set = VertexSet(std::vector<int>(ord.order.begin(), ord.order.begin() + best_stop));
  grow_to_weight(tree, cert.set, best, counters);
  return cert;
}

NiceCertificate two_approx_certificate(const WeightedTree& tree, ApproxCounters* counters) {
  if (tree.total_weight() <= 0)
    throw Error(ErrorKind::BadRange, "two_approx_certificate needs w(T) > 0");
  NiceCertificate best;
  bool have = false;
  for (int r = 1; r <= tree.n(); ++r) {
    NiceCertificate cand = smallest_r_nice(tree, r, counters);
    if (!have || cand.W < best.W) {
      have = true;
      best = std::move(cand);
    }
  }
  return best;
}

VertexSet two_approx(const WeightedTree& tree, ApproxCounters* counters) {
  if (tree.total_weight() == 0) return VertexSet{};
  return two_approx_certificate(tree, counters).set;
}

}  // namespace safeset
