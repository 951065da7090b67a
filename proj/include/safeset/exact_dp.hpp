#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

// Totally ordered NegInf < Finite(v >= 0) < PosInf, encoded in one int64 so
// the DP tables stay flat. min emptyset = PosInf, max emptyset = NegInf.
class ExtendedInt {
 public:
  static ExtendedInt neg_inf() { return ExtendedInt(kNeg); }
  static ExtendedInt pos_inf() { return ExtendedInt(kPos); }
  static ExtendedInt finite(Weight v);

  bool is_neg_inf() const { return enc_ == kNeg; }
  bool is_pos_inf() const { return enc_ == kPos; }
  bool is_finite() const { return enc_ != kNeg && enc_ != kPos; }
  Weight value() const;  // finite only

  // Compare against a plain non-negative integer.
  bool le(Weight v) const { return enc_ <= v; }
  bool ge(Weight v) const { return enc_ >= v; }

  friend bool operator==(ExtendedInt, ExtendedInt) = default;
  friend auto operator<=>(ExtendedInt a, ExtendedInt b) { return a.enc_ <=> b.enc_; }

  long long encoded() const { return enc_; }
  static ExtendedInt from_encoded(long long enc) { return ExtendedInt(enc); }

 private:
  explicit ExtendedInt(long long enc) : enc_(enc) {}

  static constexpr long long kNeg = INT64_MIN;
  static constexpr long long kPos = INT64_MAX;
  long long enc_;
};

struct DpCounters {
  std::uint64_t cell_writes = 0;
  std::uint64_t candidate_ops = 0;
  std::uint64_t total() const { return cell_writes + candidate_ops; }
};

// Table slice for one (u, I). Feasible (1,s,a) entries force s == a, so only
// the diagonal is stored; at(1,s,a) answers PosInf off the diagonal. The
// choice arrays record the winning branch/split for witness reconstruction.
struct DpSlice {
  Weight budget = 0;
  std::vector<long long> one_diag;          // encoded p(1,s,s), s in [W]_0
  std::vector<long long> zero;              // encoded p(0,s,a), row-major s*(W+1)+a
  std::vector<int> one_choice;              // single: 1|2; combine: chosen s'
  std::vector<unsigned char> zero_choice;   // 0 none, 1 first branch, 2 second

  ExtendedInt at(int b, Weight s, Weight a) const;
  long long zero_at(Weight s, Weight a) const { return zero[s * (budget + 1) + a]; }
};

// Slice for I = emptyset: the subtree containing only u.
DpSlice dp_base_case(Weight wminus_u, Weight wplus_u, Weight budget);

// Slice for I = {i}: u plus the full subtree of one child whose completed
// slice is `child_full`; `child_subtree_wplus` is that subtree's total w+.
DpSlice dp_single_child_case(Weight wminus_u, Weight wplus_u, Weight child_subtree_wplus,
                             const DpSlice& child_full, Weight budget,
                             DpCounters* counters = nullptr);

// Slice for I = [i] from the [i-1] prefix and the {i} single slice.
// `single_subtree_wplus` is w+ of child i's subtree; `prefix_rest_wplus` is
// w+ of the prefix side minus u itself.
DpSlice dp_combine_case(Weight wminus_u, Weight single_subtree_wplus, Weight prefix_rest_wplus,
                        const DpSlice& prefix, const DpSlice& single, Weight budget,
                        DpCounters* counters = nullptr);

struct ExactDpOptions {
  int root = 1;
  std::uint64_t max_table_bytes = 1'500'000'000;
  DpCounters* counters = nullptr;
};

struct ExactSolution {
  Weight weight = 0;
  VertexSet set;
};

// Minimum wminus-weight connected (w-,w+)-safe set of weight <= budget, with
// a reconstructed witness; nullopt if no such set exists within the budget.
std::optional<ExactSolution> solve_exact(const WeightedTree& tree, const DualWeights& dw,
                                         Weight budget, const ExactDpOptions& opts = {});

inline Weight default_budget(const DualWeights& dw) { return dw.minus_total(); }

}  // namespace safeset
