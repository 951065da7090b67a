#include "safeset/exact_dp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "safeset/verify.hpp"

namespace safeset {

namespace {

constexpr long long kNegEnc = INT64_MIN;
constexpr long long kPosEnc = INT64_MAX;

void bump(DpCounters* c, std::uint64_t writes, std::uint64_t cands) {
  if (c) {
    c->cell_writes += writes;
    c->candidate_ops += cands;
  }
}

}  // namespace

ExtendedInt ExtendedInt::finite(Weight v) {
  if (v < 0 || v == kPos) throw std::invalid_argument("finite extended value out of range");
  return ExtendedInt(v);
}

Weight ExtendedInt::value() const {
  if (!is_finite()) throw std::logic_error("value() on infinite ExtendedInt");
  return enc_;
}

ExtendedInt DpSlice::at(int b, Weight s, Weight a) const {
  if (s < 0 || s > budget || a < 0 || a > budget)
    throw std::out_of_range("DpSlice index outside [W]_0");
  if (b == 1) {
    // Connectivity collapses feasible (1,s,a) entries onto s == a.
    if (s != a) return ExtendedInt::pos_inf();
    return ExtendedInt::from_encoded(one_diag[s]);
  }
  return ExtendedInt::from_encoded(zero_at(s, a));
}

DpSlice dp_base_case(Weight wminus_u, Weight wplus_u, Weight budget) {
  DpSlice slice;
  slice.budget = budget;
  slice.one_diag.assign(budget + 1, kPosEnc);
  if (wminus_u <= budget) slice.one_diag[wminus_u] = kNegEnc;
  slice.zero.assign((budget + 1) * (budget + 1), kNegEnc);
  if (wplus_u <= budget) slice.zero[0 * (budget + 1) + wplus_u] = kPosEnc;
  return slice;
}

DpSlice dp_single_child_case(Weight wminus_u, Weight wplus_u, Weight child_subtree_wplus,
                             const DpSlice& child_full, Weight budget, DpCounters* counters) {
  assert(child_full.budget == budget);
  const Weight W = budget;
  DpSlice slice;
  slice.budget = W;
  slice.one_diag.assign(W + 1, kPosEnc);
  slice.one_choice.assign(W + 1, 0);
  slice.zero.assign((W + 1) * (W + 1), kNegEnc);
  slice.zero_choice.assign((W + 1) * (W + 1), 0);

  // b=1: either S = {u} (possible only when s = w-(u)), or v_i joins S and the
  // rest is the child's connected entry at s - w-(u). Zero weights allow both
  // cases at s = w-(u), so the value is the min over the applicable branches.
  for (Weight s = 0; s <= W; ++s) {
    long long best = kPosEnc;
    int choice = 0;
    if (s == wminus_u && child_subtree_wplus < kPosEnc) {
      best = child_subtree_wplus;
      choice = 1;
    }
    if (s >= wminus_u) {
      long long cand = child_full.one_diag[s - wminus_u];
      if (cand < best) {
        best = cand;
        choice = 2;
      }
    }
    slice.one_diag[s] = best;
    slice.one_choice[s] = choice;
    bump(counters, 1, 2);
  }

  // b=0: either v_i is in S (then D_u = {u}, so a = w+(u) and the child side
  // must be internally safe: p_child(1,s,a') <= a', feasible only at a' = s),
  // or v_i stays outside and D_u extends the child's D_{v_i} by u.
  for (Weight s = 0; s <= W; ++s) {
    for (Weight a = 0; a <= W; ++a) {
      long long best = kNegEnc;
      int choice = 0;
      if (a == wplus_u) {
        long long child_one = child_full.one_diag[s];
        if (child_one <= s) {
          best = s;
          choice = 1;
        }
      }
      if (a >= wplus_u) {
        long long cand = child_full.zero_at(s, a - wplus_u);
        if (cand > best) {
          best = cand;
          choice = 2;
        }
      }
      slice.zero[s * (W + 1) + a] = best;
      slice.zero_choice[s * (W + 1) + a] = static_cast<unsigned char>(choice);
      bump(counters, 1, 2);
    }
  }
  return slice;
}

DpSlice dp_combine_case(Weight wminus_u, Weight single_subtree_wplus, Weight prefix_rest_wplus,
                        const DpSlice& prefix, const DpSlice& single, Weight budget,
                        DpCounters* counters) {
  assert(prefix.budget == budget && single.budget == budget);
  const Weight W = budget;
  DpSlice slice;
  slice.budget = W;
  slice.one_diag.assign(W + 1, kPosEnc);
  slice.one_choice.assign(W + 1, -1);
  slice.zero.assign((W + 1) * (W + 1), kNegEnc);
  slice.zero_choice.assign((W + 1) * (W + 1), 0);

  // b=1: glue the two sides at u; u's weight is counted on both sides, so the
  // split satisfies s' + s'' = s + w-(u). Only diagonal entries of either side
  // can be finite, which pins the a-split to the s-split.
  for (Weight s = 0; s <= W; ++s) {
    Weight total = s + wminus_u;
    long long best = kPosEnc;
    int choice = -1;
    Weight lo = std::max<Weight>(0, total - W);
    Weight hi = std::min<Weight>(W, total);
    for (Weight sp = lo; sp <= hi; ++sp) {
      long long a_side = prefix.one_diag[sp];
      long long b_side = single.one_diag[total - sp];
      long long cand = std::max(a_side, b_side);
      if (cand < best) {
        best = cand;
        choice = static_cast<int>(sp);
      }
      bump(counters, 0, 1);
    }
    slice.one_diag[s] = best;
    slice.one_choice[s] = choice;
    bump(counters, 1, 0);
  }

  // b=0: a connected S avoiding u lies entirely in one side. The other side's
  // vertices (minus u) join D_u, shifting the a index down by their total w+.
  for (Weight s = 0; s <= W; ++s) {
    for (Weight a = 0; a <= W; ++a) {
      long long best = kNegEnc;
      int choice = 0;
      if (a >= single_subtree_wplus) {
        long long cand = prefix.zero_at(s, a - single_subtree_wplus);
        if (cand > best) {
          best = cand;
          choice = 1;
        }
      }
      if (a >= prefix_rest_wplus) {
        long long cand = single.zero_at(s, a - prefix_rest_wplus);
        if (cand > best) {
          best = cand;
          choice = 2;
        }
      }
      slice.zero[s * (W + 1) + a] = best;
      slice.zero_choice[s * (W + 1) + a] = static_cast<unsigned char>(choice);
      bump(counters, 1, 2);
    }
  }
  return slice;
}

namespace {

struct VertexTables {
  std::vector<DpSlice> singles;   // slice for I={i}, i = 1..k
  std::vector<DpSlice> prefixes;  // slice for I=[i], i = 2..k (index i-2)
  std::optional<DpSlice> base;    // stored for leaves only (their full slice)
};

class ExactDpSolver {
 public:
  ExactDpSolver(const WeightedTree& tree, const DualWeights& dw, Weight budget,
                const ExactDpOptions& opts)
      : tree_(tree),
        dw_(dw),
        W_(budget),
        opts_(opts),
        rooted_(tree, opts.root, dw.plus_weights()),
        tables_(tree.n() + 1) {}

  std::optional<ExactSolution> run() {
    check_table_size();
    build_tables();
    return scan_root();
  }

 private:
  void check_table_size() {
    std::uint64_t slices = 0;
    for (int v = 1; v <= tree_.n(); ++v) {
      std::uint64_t k = rooted_.children(v).size();
      slices += (k == 0) ? 1 : k + (k >= 2 ? k - 1 : 0);
    }
    std::uint64_t per_slice = static_cast<std::uint64_t>(W_ + 1) * (W_ + 1) * 9 +
                              static_cast<std::uint64_t>(W_ + 1) * 12;
    if (slices * per_slice > opts_.max_table_bytes)
      throw Error(ErrorKind::BudgetOverflow,
                  "budget " + std::to_string(W_) + " needs ~" +
                      std::to_string(slices * per_slice / (1 << 20)) +
                      " MiB of tables, above the configured cap");
  }

  const DpSlice& full_slice(int u) const {
    const auto& t = tables_[u];
    std::size_t k = rooted_.children(u).size();
    if (k == 0) return *t.base;
    if (k == 1) return t.singles[0];
    return t.prefixes[k - 2];
  }

  void build_tables() {
    const auto& order = rooted_.order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int u = *it;
      const auto& kids = rooted_.children(u);
      auto& t = tables_[u];
      if (kids.empty()) {
        t.base = dp_base_case(dw_.minus(u), dw_.plus(u), W_);
        continue;
      }
      t.singles.reserve(kids.size());
      for (int v : kids)
        t.singles.push_back(dp_single_child_case(dw_.minus(u), dw_.plus(u),
                                                 rooted_.subtree_weight(v), full_slice(v), W_,
                                                 opts_.counters));
      Weight rest = 0;  // w+ of the subtrees of children 1..i-1
      for (std::size_t i = 2; i <= kids.size(); ++i) {
        rest += rooted_.subtree_weight(kids[i - 2]);
        const DpSlice& prefix = (i == 2) ? t.singles[0] : t.prefixes[i - 3];
        t.prefixes.push_back(dp_combine_case(dw_.minus(u), rooted_.subtree_weight(kids[i - 1]),
                                             rest, prefix, t.singles[i - 1], W_,
                                             opts_.counters));
      }
    }
  }

  std::optional<ExactSolution> scan_root() {
    int r = rooted_.root();
    const DpSlice& root = full_slice(r);
    for (Weight s = 0; s <= W_; ++s) {
      if (root.one_diag[s] <= s) return reconstruct_solution(r, 1, s, s);
      for (Weight a = 0; a <= s; ++a)
        if (root.zero_at(s, a) >= a) return reconstruct_solution(r, 0, s, a);
    }
    return std::nullopt;
  }

  ExactSolution reconstruct_solution(int r, int b, Weight s, Weight a) {
    std::vector<int> members;
    reconstruct(r, static_cast<int>(rooted_.children(r).size()), b, s, a, members);
    VertexSet set(std::move(members));
    ExactSolution sol{s, std::move(set)};
    if (sol.set.weight(dw_.minus_weights()) != sol.weight ||
        !is_connected_set(tree_, sol.set) || !is_dual_safe(tree_, dw_, sol.set))
      throw std::logic_error("exact dp reconstruction produced an invalid witness");
    return sol;
  }

  // Rebuilds a witness for entry (b,s,a) of the slice (u, I) where I is the
  // prefix [i] (i=0 means the empty index set).
  void reconstruct(int u, int i, int b, Weight s, Weight a, std::vector<int>& out) {
    const auto& kids = rooted_.children(u);
    assert(i >= 0 && i <= static_cast<int>(kids.size()));
    if (i == 0) {
      if (b == 1) out.push_back(u);
      return;
    }
    if (i == 1) {
      reconstruct_single(u, 1, b, s, a, out);
      return;
    }
    const DpSlice& slice = tables_[u].prefixes[i - 2];
    Weight single_shift = rooted_.subtree_weight(kids[i - 1]);
    Weight rest_shift = 0;
    for (int j = 0; j + 1 < i; ++j) rest_shift += rooted_.subtree_weight(kids[j]);
    if (b == 1) {
      int sp = slice.one_choice[s];
      assert(sp >= 0);
      Weight ss = s + dw_.minus(u) - sp;
      reconstruct(u, i - 1, 1, sp, sp, out);
      reconstruct_single(u, i, 1, ss, ss, out);
    } else {
      int choice = slice.zero_choice[s * (W_ + 1) + a];
      assert(choice != 0);
      if (choice == 1)
        reconstruct(u, i - 1, 0, s, a - single_shift, out);
      else
        reconstruct_single(u, i, 0, s, a - rest_shift, out);
    }
  }

  // Witness for the single-child slice (u, {i}).
  void reconstruct_single(int u, int i, int b, Weight s, Weight a, std::vector<int>& out) {
    const DpSlice& slice = tables_[u].singles[i - 1];
    int child = rooted_.children(u)[i - 1];
    int child_k = static_cast<int>(rooted_.children(child).size());
    if (b == 1) {
      int choice = slice.one_choice[s];
      assert(choice != 0);
      out.push_back(u);
      if (choice == 2) reconstruct(child, child_k, 1, s - dw_.minus(u), s - dw_.minus(u), out);
    } else {
      int choice = slice.zero_choice[s * (W_ + 1) + a];
      assert(choice != 0);
      if (choice == 1)
        reconstruct(child, child_k, 1, s, s, out);
      else
        reconstruct(child, child_k, 0, s, a - dw_.plus(u), out);
    }
  }

  const WeightedTree& tree_;
  const DualWeights& dw_;
  Weight W_;
  const ExactDpOptions& opts_;
  RootedView rooted_;
  std::vector<VertexTables> tables_;
};

}  // namespace

std::optional<ExactSolution> solve_exact(const WeightedTree& tree, const DualWeights& dw,
                                         Weight budget, const ExactDpOptions& opts) {
  if (dw.n() != tree.n()) throw Error(ErrorKind::BadRange, "dual weights cover a different n");
  if (budget < 0) throw Error(ErrorKind::BadRange, "budget must be non-negative");
  if (opts.root < 1 || opts.root > tree.n())
    throw Error(ErrorKind::BadVertexId, "dp root outside 1..n");
  ExactDpSolver solver(tree, dw, budget, opts);
  return solver.run();
}

}  // namespace safeset
