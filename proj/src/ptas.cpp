#include "safeset/ptas.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "safeset/approx2.hpp"
#include "safeset/exact_dp.hpp"
#include "safeset/verify.hpp"

namespace safeset {

void PtasWorkBudget::charge(std::uint64_t amount) {
  used += amount;
  if (used > limit)
    throw Error(ErrorKind::CapTooLarge,
                "heavy-subset enumeration exceeded the work budget of " + std::to_string(limit) +
                    " subsets; epsilon is too small for this instance");
}

VertexSet forced_core(const WeightedTree& tree, int root, Weight w_bound) {
  if (w_bound < 1) throw Error(ErrorKind::BadRange, "forced_core needs W >= 1");
  RootedView rooted(tree, root);
  std::vector<int> members;
  members.push_back(root);
  for (int v = 1; v <= tree.n(); ++v)
    if (v != root && rooted.subtree_weight(v) > w_bound) members.push_back(v);
  return VertexSet(std::move(members));
}

namespace {

// All size-k index combinations of [0, m), lexicographic; fn returns false to
// abort the enumeration.
template <class Fn>
bool combinations(int m, int k, std::vector<int>& idx, int start, Fn&& fn) {
  if (static_cast<int>(idx.size()) == k) return fn(idx);
  for (int i = start; i < m; ++i) {
    idx.push_back(i);
    if (!combinations(m, k, idx, i + 1, fn)) return false;
    idx.pop_back();
  }
  return true;
}

struct Candidate {
  Weight weight = 0;
  VertexSet set;
};

bool candidate_better(const Candidate& a, const Candidate& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.set < b.set;
}

}  // namespace

std::optional<VertexSet> bounded_connected_set(const WeightedTree& tree, int root, Weight w_bound,
                                               Weight d_w, PtasWorkBudget* budget) {
  if (w_bound < 1 || d_w < 1)
    throw Error(ErrorKind::BadRange, "bounded_connected_set needs W >= 1 and dW >= 1");
  const int n = tree.n();
  RootedView rooted(tree, root);

  std::vector<char> in_core(n + 1, 0);
  Weight core_weight = 0;
  in_core[root] = 1;
  core_weight += tree.weight(root);
  for (int v = 1; v <= n; ++v)
    if (v != root && rooted.subtree_weight(v) > w_bound) {
      in_core[v] = 1;
      core_weight += tree.weight(v);
    }

  std::vector<int> heavy;  // L = heavy vertices outside the forced core
  std::vector<char> in_heavy(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    if (!in_core[v] && tree.weight(v) > d_w) {
      heavy.push_back(v);
      in_heavy[v] = 1;
    }

  if (core_weight > w_bound + d_w) return std::nullopt;  // T' contains the core

  const int max_pick = static_cast<int>(
      std::min<Weight>(static_cast<Weight>(heavy.size()), (w_bound + d_w - 1) / d_w));

  std::vector<char> in_pick(n + 1, 0);
  std::vector<char> in_closure(n + 1, 0);
  std::vector<char> in_piece(n + 1, 0);
  std::vector<int> touched;

  std::optional<VertexSet> result;
  std::vector<int> idx;
  for (int k = 0; k <= max_pick && !result; ++k) {
    combinations(static_cast<int>(heavy.size()), k, idx, 0, [&](const std::vector<int>& pick) {
      if (budget) budget->charge();
      for (int i : pick) in_pick[heavy[i]] = 1;

      // T': ancestor closure of core + L'. Walking parents until a marked
      // vertex is hit terminates because the core is ancestor-closed.
      touched.clear();
      Weight closure_weight = core_weight;
      bool ok = true;
      for (int i : pick) {
        int v = heavy[i];
        while (!in_core[v] && !in_closure[v]) {
          in_closure[v] = 1;
          touched.push_back(v);
          closure_weight += tree.weight(v);
          if (in_heavy[v] && !in_pick[v]) ok = false;  // pulled in an unchosen heavy vertex
          v = rooted.parent(v);
        }
      }
      ok = ok && closure_weight <= w_bound + d_w;

      if (ok) {
        // T'': component of T - (L \ L') containing the root.
        std::fill(in_piece.begin(), in_piece.end(), 0);
        Weight piece_weight = 0;
        std::queue<int> q;
        q.push(root);
        in_piece[root] = 1;
        while (!q.empty()) {
          int v = q.front();
          q.pop();
          piece_weight += tree.weight(v);
          for (int u : tree.neighbors(v)) {
            if (in_piece[u] || (in_heavy[u] && !in_pick[u])) continue;
            in_piece[u] = 1;
            q.push(u);
          }
        }
        if (piece_weight >= w_bound) {
          // Grow T' inside T'' by light vertices until the weight window.
          std::vector<int> members;
          Weight have = 0;
          for (int v = 1; v <= n; ++v)
            if (in_core[v] || in_closure[v]) {
              members.push_back(v);
              have += tree.weight(v);
            }
          std::vector<char> in_set(n + 1, 0), queued(n + 1, 0);
          for (int v : members) in_set[v] = 1;
          std::queue<int> grow;
          for (int v : members)
            for (int u : tree.neighbors(v))
              if (in_piece[u] && !in_set[u] && !queued[u]) {
                queued[u] = 1;
                grow.push(u);
              }
          while (have < w_bound) {
            assert(!grow.empty());  // piece_weight >= w_bound guarantees reachability
            int v = grow.front();
            grow.pop();
            in_set[v] = 1;
            members.push_back(v);
            have += tree.weight(v);
            for (int u : tree.neighbors(v))
              if (in_piece[u] && !in_set[u] && !queued[u]) {
                queued[u] = 1;
                grow.push(u);
              }
          }
          result = VertexSet(std::move(members));
        }
      }

      for (int v : touched) in_closure[v] = 0;
      for (int i : pick) in_pick[heavy[i]] = 0;
      return !result;  // stop at the first success
    });
  }
  return result;
}

std::optional<std::pair<Weight, VertexSet>> case1_component_search(const WeightedTree& tree,
                                                                   Weight d_w,
                                                                   const VertexSet& heavy,
                                                                   int cap,
                                                                   PtasWorkBudget* budget) {
  const int n = tree.n();
  for (int v = 1; v <= n; ++v)
    if (heavy.contains(v) != (tree.weight(v) > d_w))
      throw Error(ErrorKind::BadRange, "heavy set does not match {u : w(u) > dW}");

  const std::vector<int>& hv = heavy.members();
  std::vector<char> in_heavy(n + 1, 0);
  for (int v : hv) in_heavy[v] = 1;

  std::optional<Candidate> best;
  auto consider = [&](std::vector<int> piece) {
    Weight w = 0;
    std::vector<char> in(n + 1, 0);
    for (int v : piece) {
      in[v] = 1;
      w += tree.weight(v);
    }
    if (detail::find_safety_violation_adj(n, tree.adjacency(), tree.weights(), tree.weights(), in))
      return;
    Candidate cand{w, VertexSet(std::move(piece))};
    if (!best || candidate_better(cand, *best)) best = std::move(cand);
  };

  // L' = empty: every component of T - L is a candidate.
  if (budget) budget->charge();
  for (auto& comp : components_of_complement(tree, heavy))
    consider(std::vector<int>(comp.members()));

  // Non-empty L': the unique component of T - (L \ L') containing all of L'.
  std::vector<char> in_pick(n + 1, 0);
  std::vector<int> idx;
  for (int k = 1; k <= std::min<int>(cap, static_cast<int>(hv.size())); ++k) {
    combinations(static_cast<int>(hv.size()), k, idx, 0, [&](const std::vector<int>& pick) {
      if (budget) budget->charge();
      for (int i : pick) in_pick[hv[i]] = 1;
      std::vector<int> piece;
      std::vector<char> seen(n + 1, 0);
      std::queue<int> q;
      int start = hv[pick[0]];
      q.push(start);
      seen[start] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        piece.push_back(v);
        for (int u : tree.neighbors(v)) {
          if (seen[u] || (in_heavy[u] && !in_pick[u])) continue;
          seen[u] = 1;
          q.push(u);
        }
      }
      bool spans = true;
      for (int i : pick)
        if (!seen[hv[i]]) spans = false;  // L' split across components: skip
      if (spans) consider(std::move(piece));
      for (int i : pick) in_pick[hv[i]] = 0;
      return true;
    });
  }

  if (!best) return std::nullopt;
  return std::make_pair(best->weight, best->set);
}

VertexSet ptas_solve(const WeightedTree& tree, Rational eps, const PtasOptions& opts) {
  if (!eps.is_positive()) throw Error(ErrorKind::BadRange, "epsilon must be positive");
  PtasReport local_report;
  PtasReport& report = opts.report ? *opts.report : local_report;
  report = PtasReport{};
  report.eps = eps;
  report.eps_internal = Rational(eps.num(), 3 * eps.den());

  if (tree.total_weight() == 0) return VertexSet{};

  const long long p = eps.num(), q = eps.den();
  VertexSet baseline = two_approx(tree);
  Weight w_s1 = baseline.weight(tree.weights());
  report.baseline = baseline;

  // dW = floor(eps' * w(S1) / 2) with eps' = p/(3q).
  Weight d_w = floor_mul_div(w_s1, p, 6 * q);
  report.d_w = d_w;

  if (d_w == 0) {
    // w(S1) below the granularity threshold: the instance is solved exactly.
    report.exact_path = true;
    auto sol = solve_exact(tree, DualWeights::uniform(tree), w_s1);
    assert(sol.has_value());  // S1 itself fits the budget
    report.result_weight = sol->weight;
    return sol->set;
  }

  std::vector<int> heavy_members;
  for (int v = 1; v <= tree.n(); ++v)
    if (tree.weight(v) > d_w) heavy_members.push_back(v);
  VertexSet heavy(std::move(heavy_members));
  report.heavy = heavy;

  PtasWorkBudget budget{opts.work_budget, 0};
  Candidate best{w_s1, baseline};

  // Case 1: a cheapest safe component of T - (L \ L') over small L'.
  const long long cap = 12 * q / p;  // floor(4 / eps')
  if (auto found = case1_component_search(tree, d_w, heavy,
                                          static_cast<int>(std::min<long long>(cap, tree.n())),
                                          &budget)) {
    Candidate cand{found->first, found->second};
    if (candidate_better(cand, best)) best = std::move(cand);
  }

  // Case 2: grid W_i = (i-1)*dW, window 2*dW, every root. W_1 = 0 is skipped;
  // the accepting grid point for any positive optimum is i >= 2.
  const long long k = (12 * q + p - 1) / p + 1;  // ceil(4/eps') + 1
  for (long long i = 2; i <= k; ++i) {
    Weight w_i = (i - 1) * d_w;
    for (int r = 1; r <= tree.n(); ++r) {
      if (auto s = bounded_connected_set(tree, r, w_i, 2 * d_w, &budget)) {
        Candidate cand{s->weight(tree.weights()), std::move(*s)};
        if (candidate_better(cand, best)) best = std::move(cand);
      }
    }
  }

  report.result_weight = best.weight;
  return best.set;
}

}  // namespace safeset
