#include "safeset/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace safeset {

namespace {

void check_vertex_id(int v, int n) {
  if (v < 1 || v > n)
    throw Error(ErrorKind::BadVertexId,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

// Union-find used only for build-time validation.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 1);
  VertexSet s;
  s.members_ = std::move(m);
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::add(int v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

Weight VertexSet::weight(const std::vector<Weight>& weights) const {
  Weight total = 0;
  for (int v : members_) {
    assert(v >= 1 && v < static_cast<int>(weights.size()));
    total += weights[v];
  }
  return total;
}

WeightedTree WeightedTree::build(int n, std::vector<std::pair<int, int>> edges,
                                 const std::vector<Weight>& weights) {
  if (n < 1) throw Error(ErrorKind::BadRange, "tree needs n >= 1");
  if (static_cast<int>(weights.size()) != n)
    throw Error(ErrorKind::BadRange, "expected " + std::to_string(n) + " weights, got " +
                                         std::to_string(weights.size()));
  for (const auto& [u, v] : edges) {
    check_vertex_id(u, n);
    check_vertex_id(v, n);
  }
  Dsu dsu(n);
  for (const auto& [u, v] : edges) {
    if (u == v || !dsu.join(u, v))
      throw Error(ErrorKind::Cyclic, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                         ") closes a cycle");
  }
  if (static_cast<int>(edges.size()) != n - 1)
    throw Error(ErrorKind::Disconnected, "tree on " + std::to_string(n) + " vertices needs " +
                                             std::to_string(n - 1) + " edges, got " +
                                             std::to_string(edges.size()));
  for (int v = 2; v <= n; ++v)
    if (dsu.find(v) != dsu.find(1))
      throw Error(ErrorKind::Disconnected, "vertex " + std::to_string(v) + " unreachable from 1");

  WeightedTree t;
  t.n_ = n;
  t.edges_ = std::move(edges);
  t.weights_.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    Weight w = weights[v - 1];
    if (w < 0)
      throw Error(ErrorKind::NegativeWeight,
                  "vertex " + std::to_string(v) + " has weight " + std::to_string(w));
    t.weights_[v] = w;
    t.total_ += w;
    if (t.total_ > kMaxTotalWeight)
      throw Error(ErrorKind::WeightOverflow, "total weight exceeds supported range");
  }
  t.adj_.assign(n + 1, {});
  for (const auto& [u, v] : t.edges_) {
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  }
  for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
  return t;
}

WeightedTree WeightedTree::with_weights(const std::vector<Weight>& weights) const {
  return build(n_, edges_, weights);
}

DualWeights DualWeights::build(const std::vector<Weight>& wminus,
                               const std::vector<Weight>& wplus) {
  if (wminus.empty() || wminus.size() != wplus.size())
    throw Error(ErrorKind::BadRange, "dual weight arrays must be non-empty and equal-sized");
  DualWeights d;
  d.n_ = static_cast<int>(wminus.size());
  d.wminus_.assign(d.n_ + 1, 0);
  d.wplus_.assign(d.n_ + 1, 0);
  Weight tm = 0, tp = 0;
  for (int v = 1; v <= d.n_; ++v) {
    Weight a = wminus[v - 1], b = wplus[v - 1];
    if (a < 0 || b < 0)
      throw Error(ErrorKind::NegativeWeight, "dual weight at vertex " + std::to_string(v));
    d.wminus_[v] = a;
    d.wplus_[v] = b;
    tm += a;
    tp += b;
    if (tm > kMaxTotalWeight || tp > kMaxTotalWeight)
      throw Error(ErrorKind::WeightOverflow, "total dual weight exceeds supported range");
  }
  return d;
}

DualWeights DualWeights::uniform(const WeightedTree& tree) {
  std::vector<Weight> w(tree.weights().begin() + 1, tree.weights().end());
  return build(w, w);
}

Weight DualWeights::minus_total() const {
  Weight t = 0;
  for (int v = 1; v <= n_; ++v) t += wminus_[v];
  return t;
}

Weight DualWeights::plus_total() const {
  Weight t = 0;
  for (int v = 1; v <= n_; ++v) t += wplus_[v];
  return t;
}

SimpleGraph SimpleGraph::build(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw Error(ErrorKind::BadRange, "graph needs n >= 1");
  SimpleGraph g;
  g.n_ = n;
  g.adj_.assign(n + 1, {});
  for (auto& [u, v] : edges) {
    check_vertex_id(u, n);
    check_vertex_id(v, n);
    if (u == v) throw Error(ErrorKind::BadRange, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(ErrorKind::BadRange, "parallel edge (" + std::to_string(edges[i].first) + "," +
                                           std::to_string(edges[i].second) + ")");
  g.edges_ = std::move(edges);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

SimpleGraph SimpleGraph::from_tree(const WeightedTree& tree) {
  return build(tree.n(), tree.edges());
}

bool SimpleGraph::adjacent(int u, int v) const {
  check_vertex_id(u, n_);
  check_vertex_id(v, n_);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool SimpleGraph::connected() const {
  std::vector<char> seen(n_ + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == n_;
}

RootedView::RootedView(const WeightedTree& tree, int root)
    : RootedView(tree, root, tree.weights()) {}

RootedView::RootedView(const WeightedTree& tree, int root, const std::vector<Weight>& weights) {
  int n = tree.n();
  check_vertex_id(root, n);
  assert(static_cast<int>(weights.size()) == n + 1);
  root_ = root;
  parent_.assign(n + 1, 0);
  children_.assign(n + 1, {});
  subtree_.assign(n + 1, 0);
  order_.reserve(n);
  std::vector<char> seen(n + 1, 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order_.push_back(v);
    for (int u : tree.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      parent_[u] = v;
      children_[v].push_back(u);  // neighbors are ascending, so children are too
      q.push(u);
    }
  }
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    int v = *it;
    subtree_[v] = weights[v];
    for (int c : children_[v]) subtree_[v] += subtree_[c];
  }
}

}  // namespace safeset
