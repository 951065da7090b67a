#include "safeset/verify.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace safeset {

namespace {

void check_members(int n, const VertexSet& s) {
  for (int v : s)
    if (v < 1 || v > n)
      throw Error(ErrorKind::BadVertexId,
                  "set member " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

std::vector<char> membership(int n, const VertexSet& s) {
  check_members(n, s);
  std::vector<char> in(n + 1, 0);
  for (int v : s) in[v] = 1;
  return in;
}

// Labels the components of the subgraph induced by {v : keep(v)}; returns the
// number of components, ids in comp[] are assigned by ascending minimum vertex.
template <class Keep>
int label_components(int n, const std::vector<std::vector<int>>& adj, Keep keep,
                     std::vector<int>& comp) {
  comp.assign(n + 1, -1);
  int count = 0;
  std::queue<int> q;
  for (int v = 1; v <= n; ++v) {
    if (!keep(v) || comp[v] >= 0) continue;
    comp[v] = count;
    q.push(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (keep(y) && comp[y] < 0) {
          comp[y] = count;
          q.push(y);
        }
    }
    ++count;
  }
  return count;
}

std::vector<VertexSet> components_impl(int n, const std::vector<std::vector<int>>& adj,
                                       const VertexSet& s) {
  auto in = membership(n, s);
  std::vector<int> comp;
  int count = label_components(n, adj, [&](int v) { return !in[v]; }, comp);
  std::vector<std::vector<int>> groups(count);
  for (int v = 1; v <= n; ++v)
    if (comp[v] >= 0) groups[comp[v]].push_back(v);
  std::vector<VertexSet> result;
  result.reserve(count);
  for (auto& g : groups) result.push_back(VertexSet(std::move(g)));
  return result;
}

}  // namespace

namespace detail {

bool is_connected_membership(int n, const std::vector<std::vector<int>>& adj,
                             const std::vector<char>& in_s, int member_count) {
  if (member_count == 0) return true;
  int start = 0;
  for (int v = 1; v <= n; ++v)
    if (in_s[v]) {
      start = v;
      break;
    }
  std::vector<char> seen(n + 1, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (in_s[u] && !seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == member_count;
}

std::optional<SafetyViolation> find_safety_violation_adj(
    int n, const std::vector<std::vector<int>>& adj, const std::vector<Weight>& wminus,
    const std::vector<Weight>& wplus, const std::vector<char>& in_s) {
  std::vector<int> comp_out;
  int out_count = label_components(n, adj, [&](int v) { return !in_s[v]; }, comp_out);
  std::vector<Weight> out_weight(out_count, 0);
  for (int v = 1; v <= n; ++v)
    if (comp_out[v] >= 0) out_weight[comp_out[v]] += wplus[v];

  auto collect_out = [&](int id) {
    std::vector<int> vs;
    for (int v = 1; v <= n; ++v)
      if (comp_out[v] == id) vs.push_back(v);
    return VertexSet(std::move(vs));
  };

  bool s_empty = true;
  for (int v = 1; v <= n && s_empty; ++v)
    if (in_s[v]) s_empty = false;
  if (s_empty) {
    // No inside component exists; the convention is that the empty set is
    // safe exactly when nothing of positive wplus-weight is left outside.
    for (int id = 0; id < out_count; ++id)
      if (out_weight[id] > 0)
        return SafetyViolation{VertexSet{}, collect_out(id), 0, out_weight[id]};
    return std::nullopt;
  }

  std::vector<int> comp_in;
  int in_count = label_components(n, adj, [&](int v) { return static_cast<bool>(in_s[v]); },
                                  comp_in);
  std::vector<Weight> in_weight(in_count, 0);
  for (int v = 1; v <= n; ++v)
    if (comp_in[v] >= 0) in_weight[comp_in[v]] += wminus[v];

  for (int v = 1; v <= n; ++v) {
    if (!in_s[v]) continue;
    for (int u : adj[v]) {
      if (in_s[u]) continue;
      int c = comp_in[v], d = comp_out[u];
      if (in_weight[c] < out_weight[d]) {
        std::vector<int> cs;
        for (int x = 1; x <= n; ++x)
          if (comp_in[x] == c) cs.push_back(x);
        return SafetyViolation{VertexSet(std::move(cs)), collect_out(d), in_weight[c],
                               out_weight[d]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::vector<VertexSet> components_of_complement(const WeightedTree& g, const VertexSet& s) {
  return components_impl(g.n(), g.adjacency(), s);
}

std::vector<VertexSet> components_of_complement(const SimpleGraph& g, const VertexSet& s) {
  return components_impl(g.n(), g.adjacency(), s);
}

bool is_connected_set(const WeightedTree& g, const VertexSet& s) {
  auto in = membership(g.n(), s);
  return detail::is_connected_membership(g.n(), g.adjacency(), in, s.size());
}

bool is_connected_set(const SimpleGraph& g, const VertexSet& s) {
  auto in = membership(g.n(), s);
  return detail::is_connected_membership(g.n(), g.adjacency(), in, s.size());
}

std::optional<SafetyViolation> find_safety_violation(const WeightedTree& tree,
                                                     const DualWeights& dw, const VertexSet& s) {
  if (dw.n() != tree.n()) throw Error(ErrorKind::BadRange, "dual weights cover a different n");
  auto in = membership(tree.n(), s);
  return detail::find_safety_violation_adj(tree.n(), tree.adjacency(), dw.minus_weights(),
                                           dw.plus_weights(), in);
}

std::optional<SafetyViolation> find_safety_violation(const SimpleGraph& g,
                                                     const std::vector<Weight>& wminus,
                                                     const std::vector<Weight>& wplus,
                                                     const VertexSet& s) {
  assert(static_cast<int>(wminus.size()) == g.n() + 1);
  assert(static_cast<int>(wplus.size()) == g.n() + 1);
  auto in = membership(g.n(), s);
  return detail::find_safety_violation_adj(g.n(), g.adjacency(), wminus, wplus, in);
}

bool is_dual_safe(const WeightedTree& tree, const DualWeights& dw, const VertexSet& s) {
  return !find_safety_violation(tree, dw, s).has_value();
}

bool is_safe(const SimpleGraph& g, const std::vector<Weight>& w, const VertexSet& s) {
  return !find_safety_violation(g, w, w, s).has_value();
}

}  // namespace safeset
