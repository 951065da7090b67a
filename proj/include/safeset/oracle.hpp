#pragma once

#include <optional>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

// Exhaustive reference solvers. Deliberately naive: these certify every other
// algorithm on small instances, so no pruning that could risk correctness.
struct OracleOptions {
  int max_n = 20;
};

struct OracleSolution {
  Weight weight = 0;
  VertexSet set;
};

// All connected vertex sets (including the empty set), sorted by cardinality
// then lexicographically.
std::vector<VertexSet> enumerate_connected_sets(const SimpleGraph& g, OracleOptions opts = {});
std::vector<VertexSet> enumerate_connected_sets(const WeightedTree& t, OracleOptions opts = {});

// Minimum wminus-weight connected (w-,w+)-safe set; ties by cardinality then
// lexicographic member list. Always succeeds (the full vertex set is safe).
OracleSolution brute_connected_safe_min(const WeightedTree& t, const DualWeights& dw,
                                        OracleOptions opts = {});
OracleSolution brute_connected_safe_min(const SimpleGraph& g, const std::vector<Weight>& w,
                                        OracleOptions opts = {});

// Minimum-weight w-safe set over all 2^n subsets (S need not be connected).
OracleSolution brute_safe_min(const SimpleGraph& g, const std::vector<Weight>& w,
                              OracleOptions opts = {});
OracleSolution brute_safe_min(const WeightedTree& t, OracleOptions opts = {});

// Standard reachability table; independent of every tree solver.
bool subset_sum_feasible(const std::vector<Weight>& values, Weight target);

}  // namespace safeset
