#pragma once

#include <cstdint>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

struct ApproxCounters {
  std::uint64_t ops = 0;
};

// Vertex order u(1..n) from a root: starts at the root, subtree weights
// non-increasing, every prefix connected; ties in c broken by ascending id.
struct SubtreeOrder {
  int root = 0;
  std::vector<int> order;        // u(1), ..., u(n)
  std::vector<Weight> c;         // 1-based per-vertex subtree weight
  std::vector<int> break_indices;  // positions i with c(u(i)) > c(u(i+1))
};

SubtreeOrder subtree_weight_order(const WeightedTree& tree, int root,
                                  ApproxCounters* counters = nullptr);

// W is r-nice if some connected S containing r has W <= w(S) <= W + w_max and
// every component of T-S weighs at most W; `set` certifies the stored W.
struct NiceCertificate {
  Weight W = 0;
  int root = 0;
  std::vector<int> order;
  std::vector<int> break_indices;
  VertexSet set;
};

// Smallest r-nice integer with its certificate; requires w(T) > 0.
NiceCertificate smallest_r_nice(const WeightedTree& tree, int root,
                                ApproxCounters* counters = nullptr);

// Certificate of W_min = min over roots of W_r; requires w(T) > 0.
NiceCertificate two_approx_certificate(const WeightedTree& tree,
                                       ApproxCounters* counters = nullptr);

// Connected w-safe set of weight at most 2*cs(T,w); the empty set when
// w(T) = 0.
VertexSet two_approx(const WeightedTree& tree, ApproxCounters* counters = nullptr);

}  // namespace safeset
