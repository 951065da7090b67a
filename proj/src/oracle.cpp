#include "safeset/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "safeset/verify.hpp"

namespace safeset {

namespace {

void check_cap(int n, const OracleOptions& opts) {
  if (n > opts.max_n || n > 62)
    throw Error(ErrorKind::InstanceTooLarge, "oracle capped at n <= " + std::to_string(opts.max_n) +
                                                 ", instance has n = " + std::to_string(n));
}

// Enumerates every connected set by growing through neighbors of the current
// set. For a fixed seed vertex v0 the candidates are visited in ascending
// order, and each candidate that was skipped is banned in the later branches,
// so every connected set containing v0 (and nothing below v0) appears once.
template <class Fn>
void enum_connected_from(int n, const std::vector<std::vector<int>>& adj, int v0,
                         std::vector<int>& cur, std::uint64_t in_mask, std::uint64_t banned,
                         Fn&& emit) {
  emit(cur);
  std::vector<int> cands;
  for (int v : cur)
    for (int u : adj[v]) {
      if (u <= v0) continue;
      std::uint64_t bit = 1ULL << u;
      if ((in_mask & bit) || (banned & bit)) continue;
      cands.push_back(u);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (int u : cands) {
    cur.push_back(u);
    enum_connected_from(n, adj, v0, cur, in_mask | (1ULL << u), banned, emit);
    cur.pop_back();
    banned |= 1ULL << u;
  }
}

template <class Fn>
void for_each_connected_set(int n, const std::vector<std::vector<int>>& adj, Fn&& emit) {
  std::vector<int> empty;
  emit(empty);
  std::vector<int> cur;
  for (int v0 = 1; v0 <= n; ++v0) {
    cur.assign(1, v0);
    enum_connected_from(n, adj, v0, cur, 1ULL << v0, 0, emit);
  }
}

std::vector<VertexSet> enumerate_impl(int n, const std::vector<std::vector<int>>& adj,
                                      const OracleOptions& opts) {
  check_cap(n, opts);
  std::vector<VertexSet> out;
  for_each_connected_set(n, adj, [&](const std::vector<int>& members) {
    std::vector<int> copy(members);
    std::sort(copy.begin(), copy.end());
    out.push_back(VertexSet(std::move(copy)));
  });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool better(Weight w, const VertexSet& s, Weight best_w, const VertexSet& best_s) {
  if (w != best_w) return w < best_w;
  if (s.size() != best_s.size()) return s.size() < best_s.size();
  return s < best_s;
}

OracleSolution connected_safe_min_impl(int n, const std::vector<std::vector<int>>& adj,
                                       const std::vector<Weight>& wminus,
                                       const std::vector<Weight>& wplus,
                                       const OracleOptions& opts) {
  check_cap(n, opts);
  bool found = false;
  OracleSolution best;
  std::vector<char> in(n + 1, 0);
  for_each_connected_set(n, adj, [&](const std::vector<int>& members) {
    std::fill(in.begin(), in.end(), 0);
    Weight w = 0;
    for (int v : members) {
      in[v] = 1;
      w += wminus[v];
    }
    if (found && w > best.weight) return;
    if (detail::find_safety_violation_adj(n, adj, wminus, wplus, in)) return;
    std::vector<int> copy(members);
    std::sort(copy.begin(), copy.end());
    VertexSet s(std::move(copy));
    if (!found || better(w, s, best.weight, best.set)) {
      found = true;
      best = OracleSolution{w, std::move(s)};
    }
  });
  assert(found);  // the full vertex set is always safe
  return best;
}

}  // namespace

std::vector<VertexSet> enumerate_connected_sets(const SimpleGraph& g, OracleOptions opts) {
  return enumerate_impl(g.n(), g.adjacency(), opts);
}

std::vector<VertexSet> enumerate_connected_sets(const WeightedTree& t, OracleOptions opts) {
  return enumerate_impl(t.n(), t.adjacency(), opts);
}

OracleSolution brute_connected_safe_min(const WeightedTree& t, const DualWeights& dw,
                                        OracleOptions opts) {
  if (dw.n() != t.n()) throw Error(ErrorKind::BadRange, "dual weights cover a different n");
  return connected_safe_min_impl(t.n(), t.adjacency(), dw.minus_weights(), dw.plus_weights(),
                                 opts);
}

OracleSolution brute_connected_safe_min(const SimpleGraph& g, const std::vector<Weight>& w,
                                        OracleOptions opts) {
  assert(static_cast<int>(w.size()) == g.n() + 1);
  return connected_safe_min_impl(g.n(), g.adjacency(), w, w, opts);
}

OracleSolution brute_safe_min(const SimpleGraph& g, const std::vector<Weight>& w,
                              OracleOptions opts) {
  int n = g.n();
  check_cap(n, opts);
  assert(static_cast<int>(w.size()) == n + 1);
  const auto& adj = g.adjacency();
  bool found = false;
  OracleSolution best;
  std::vector<char> in(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    Weight wsum = 0;
    for (int v = 1; v <= n; ++v) {
      in[v] = (mask >> (v - 1)) & 1;
      if (in[v]) wsum += w[v];
    }
    if (found && wsum > best.weight) continue;
    if (detail::find_safety_violation_adj(n, adj, w, w, in)) continue;
    std::vector<int> members;
    for (int v = 1; v <= n; ++v)
      if (in[v]) members.push_back(v);
    VertexSet s(std::move(members));
    if (!found || better(wsum, s, best.weight, best.set)) {
      found = true;
      best = OracleSolution{wsum, std::move(s)};
    }
  }
  assert(found);
  return best;
}

OracleSolution brute_safe_min(const WeightedTree& t, OracleOptions opts) {
  return brute_safe_min(SimpleGraph::from_tree(t), t.weights(), opts);
}

bool subset_sum_feasible(const std::vector<Weight>& values, Weight target) {
  if (target < 0) return false;
  Weight total = 0;
  for (Weight c : values) {
    if (c <= 0) throw Error(ErrorKind::BadRange, "subset-sum values must be positive");
    total += c;
    if (total > kMaxTotalWeight)
      throw Error(ErrorKind::WeightOverflow, "subset-sum total exceeds supported range");
  }
  if (target > total) return false;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (Weight c : values)
    for (Weight j = target; j >= c; --j)
      if (reach[j - c]) reach[j] = 1;
  return reach[target];
}

}  // namespace safeset
