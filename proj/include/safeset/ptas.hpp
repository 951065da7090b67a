#pragma once

#include <cstdint>
#include <optional>

#include "safeset/graph.hpp"
#include "safeset/rational.hpp"

namespace safeset {

// Shared enumeration budget for the heavy-subset searches; every examined
// subset of heavy vertices costs one unit. Exhausting it raises CapTooLarge
// (epsilon too small for the instance at desk scale).
struct PtasWorkBudget {
  std::uint64_t limit = 50'000'000;
  std::uint64_t used = 0;
  void charge(std::uint64_t amount = 1);
};

// Root plus every vertex whose rooted subtree outweighs W; ancestor-closed,
// hence connected, and forced into any qualifying set.
VertexSet forced_core(const WeightedTree& tree, int root, Weight w_bound);

// Connected S containing `root` with W <= w(S) <= W + dW and every component
// of T-S of weight at most W, if one exists. W >= 1, dW >= 1.
std::optional<VertexSet> bounded_connected_set(const WeightedTree& tree, int root, Weight w_bound,
                                               Weight d_w, PtasWorkBudget* budget = nullptr);

// Minimum-weight safe candidate of the form "component of T - (heavy \ L')"
// over all L' of at most `cap` heavy vertices; heavy must equal
// {u : w(u) > d_w}.
std::optional<std::pair<Weight, VertexSet>> case1_component_search(
    const WeightedTree& tree, Weight d_w, const VertexSet& heavy, int cap,
    PtasWorkBudget* budget = nullptr);

struct PtasReport {
  Rational eps;
  Rational eps_internal;  // eps/3; the procedure delivers 1+3*eps_internal
  Weight d_w = 0;
  VertexSet heavy;
  VertexSet baseline;       // the 2-approximation S1
  bool exact_path = false;  // d_w = 0 handed the instance to the exact solver
  Weight result_weight = 0;
};

struct PtasOptions {
  std::uint64_t work_budget = 50'000'000;
  PtasReport* report = nullptr;
};

// Connected w-safe set of weight at most (1+eps)*cs(T,w).
VertexSet ptas_solve(const WeightedTree& tree, Rational eps, const PtasOptions& opts = {});

}  // namespace safeset
