#include "safeset/blockgraph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

#include "safeset/verify.hpp"

namespace safeset {

namespace {

// Hopcroft-Tarjan biconnected components with an explicit edge stack.
struct BlockFinder {
  const SimpleGraph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  explicit BlockFinder(const SimpleGraph& graph)
      : g(graph), disc(graph.n() + 1, 0), low(graph.n() + 1, 0), is_cut(graph.n() + 1, 0) {}

  void pop_block(int u, int v) {
    std::vector<int> verts;
    std::pair<int, int> e;
    do {
      e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
    } while (e != std::make_pair(u, v));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    blocks.push_back(std::move(verts));
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = ++timer;
    int child_count = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) {
        parent = 0;  // skip the tree edge once; parallel edges are rejected at build
        continue;
      }
      if (!disc[v]) {
        ++child_count;
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (disc[u] > 1 || child_count > 1) is_cut[u] = 1;
          pop_block(u, v);
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const SimpleGraph& g) {
  if (!g.connected())
    throw Error(ErrorKind::NotConnected, "block decomposition needs a connected graph");

  BlockDecomposition result;
  if (g.n() == 1) {
    result.blocks.push_back(VertexSet{1});
    result.omega = 1;
    return result;
  }

  BlockFinder finder(g);
  finder.dfs(1, 0);
  assert(finder.edge_stack.empty());

  std::sort(finder.blocks.begin(), finder.blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.front() != b.front()) return a.front() < b.front();
              return a.size() < b.size();
            });

  for (auto& verts : finder.blocks) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (!g.adjacent(verts[i], verts[j]))
          throw Error(ErrorKind::NotBlockGraph,
                      "block containing vertices " + std::to_string(verts[i]) + " and " +
                          std::to_string(verts[j]) + " is not a clique");
    result.omega = std::max(result.omega, static_cast<int>(verts.size()));
    result.blocks.push_back(VertexSet(std::move(verts)));
  }

  std::vector<int> cuts;
  for (int v = 1; v <= g.n(); ++v)
    if (finder.is_cut[v]) cuts.push_back(v);
  result.cut_vertices = VertexSet(std::move(cuts));

  for (std::size_t b = 0; b < result.blocks.size(); ++b)
    for (int v : result.blocks[b])
      if (result.cut_vertices.contains(v))
        result.block_cut_edges.emplace_back(static_cast<int>(b), v);
  return result;
}

int endblock_count(const SimpleGraph& g) {
  BlockDecomposition d = block_decomposition(g);
  int count = 0;
  for (const auto& block : d.blocks) {
    int cuts = 0;
    for (int v : block)
      if (d.cut_vertices.contains(v)) ++cuts;
    if (cuts <= 1) ++count;
  }
  return count;
}

namespace {

// Size of the largest component of G - S (0 when nothing is left).
int largest_complement_component(const SimpleGraph& g, const std::vector<char>& in_s) {
  std::vector<char> seen(g.n() + 1, 0);
  int best = 0;
  for (int v = 1; v <= g.n(); ++v) {
    if (in_s[v] || seen[v]) continue;
    int size = 0;
    std::queue<int> q;
    q.push(v);
    seen[v] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++size;
      for (int y : g.neighbors(x))
        if (!in_s[y] && !seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

std::vector<Weight> unit_weights(int n) { return std::vector<Weight>(n + 1, 1); }

// A connected safe set of exactly `target` vertices must exist (any size-
// target set whose largest outside component has at most target vertices is
// safe in a connected graph). Found by steepest-descent swaps on the largest
// component size from a family of deterministic seeds.
std::optional<VertexSet> branch_b_search(const SimpleGraph& g, int target,
                                         const std::vector<Weight>& w) {
  const int n = g.n();
  assert(target >= 1 && target <= n);

  auto gate = [&](const std::vector<char>& in_s) -> std::optional<VertexSet> {
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if (in_s[v]) members.push_back(v);
    VertexSet s(std::move(members));
    if (!is_connected_set(g, s)) return std::nullopt;
    if (!is_safe(g, w, s)) return std::nullopt;
    return s;
  };

  auto descend = [&](std::vector<char> in_s) -> std::optional<VertexSet> {
    int current = largest_complement_component(g, in_s);
    while (true) {
      if (current <= target)
        if (auto s = gate(in_s)) return s;
      // Steepest-descent exchange: move one vertex out of S and one in,
      // minimizing the largest leftover component; ties by (out, in) id.
      int best_out = 0, best_in = 0, best_val = current;
      for (int out = 1; out <= n; ++out) {
        if (!in_s[out]) continue;
        in_s[out] = 0;
        for (int in = 1; in <= n; ++in) {
          if (in_s[in] || in == out) continue;
          in_s[in] = 1;
          int val = largest_complement_component(g, in_s);
          if (val < best_val) {
            best_val = val;
            best_out = out;
            best_in = in;
          }
          in_s[in] = 0;
        }
        in_s[out] = 1;
      }
      if (best_out == 0) return std::nullopt;  // stalled
      in_s[best_out] = 0;
      in_s[best_in] = 1;
      current = best_val;
    }
  };

  // Seeds: the `target` lowest-eccentricity vertices, then a BFS ball of
  // `target` vertices around every vertex in turn.
  std::vector<std::vector<char>> seeds;
  {
    std::vector<int> ecc(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
      std::vector<int> dist(n + 1, -1);
      std::queue<int> q;
      q.push(v);
      dist[v] = 0;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        ecc[v] = std::max(ecc[v], dist[x]);
        for (int y : g.neighbors(x))
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
      }
    }
    std::vector<int> by_ecc(n);
    for (int v = 1; v <= n; ++v) by_ecc[v - 1] = v;
    std::sort(by_ecc.begin(), by_ecc.end(), [&](int a, int b) {
      if (ecc[a] != ecc[b]) return ecc[a] < ecc[b];
      return a < b;
    });
    std::vector<char> seed(n + 1, 0);
    for (int i = 0; i < target; ++i) seed[by_ecc[i]] = 1;
    seeds.push_back(std::move(seed));
  }
  for (int v = 1; v <= n; ++v) {
    std::vector<char> seed(n + 1, 0);
    int taken = 0;
    std::queue<int> q;
    q.push(v);
    seed[v] = 1;
    ++taken;
    while (!q.empty() && taken < target) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (seed[y] || taken >= target) continue;
        seed[y] = 1;
        ++taken;
        q.push(y);
      }
    }
    if (taken == target) seeds.push_back(std::move(seed));
  }

  for (auto& seed : seeds)
    if (auto s = descend(std::move(seed))) return s;
  return std::nullopt;
}

}  // namespace

VertexSet safe_upper_construct(const SimpleGraph& g, BlockBoundReport* report) {
  BlockDecomposition decomp = block_decomposition(g);
  const int n = g.n();
  const int ceil_n3 = (n + 2) / 3;
  const int ceil_w2 = (decomp.omega + 1) / 2;
  const int bound = std::max(ceil_n3, ceil_w2);
  BlockBoundReport local;
  BlockBoundReport& rep = report ? *report : local;
  rep = BlockBoundReport{};
  rep.omega = decomp.omega;
  rep.bound = bound;

  auto w = unit_weights(n);

  if (ceil_w2 >= ceil_n3 + 1) {
    // One maximum block dominates: take ceil(omega/2) of its vertices,
    // including every cut vertex of G inside it, so nothing outside the block
    // attaches to the leftover clique.
    rep.used_max_block_branch = true;
    const VertexSet* block = nullptr;
    for (const auto& b : decomp.blocks)
      if (b.size() == decomp.omega) {
        block = &b;
        break;
      }
    assert(block != nullptr);
    std::vector<int> members;
    for (int v : *block)
      if (decomp.cut_vertices.contains(v)) members.push_back(v);
    assert(static_cast<int>(members.size()) <= ceil_w2);
    for (int v : *block) {
      if (static_cast<int>(members.size()) >= ceil_w2) break;
      if (!decomp.cut_vertices.contains(v)) members.push_back(v);
    }
    VertexSet s(std::move(members));
    if (static_cast<int>(s.size()) != ceil_w2 || !is_connected_set(g, s) || !is_safe(g, w, s))
      throw Error(ErrorKind::SearchStalled, "maximum-block construction failed verification");
    return s;
  }

  if (auto s = branch_b_search(g, ceil_n3, w)) return *s;
  throw Error(ErrorKind::SearchStalled,
              "local search found no verified connected safe set of size " +
                  std::to_string(ceil_n3));
}

}  // namespace safeset
