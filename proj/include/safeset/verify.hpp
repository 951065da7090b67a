#pragma once

#include <optional>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

// First offending (C, D) pair under the component safety condition, if any.
struct SafetyViolation {
  VertexSet inside;   // component C of G[S] (empty when S itself is empty)
  VertexSet outside;  // adjacent component D of G-S
  Weight inside_weight = 0;
  Weight outside_weight = 0;
};

// Components of G-S, ordered by minimum vertex id, members ascending.
std::vector<VertexSet> components_of_complement(const WeightedTree& g, const VertexSet& s);
std::vector<VertexSet> components_of_complement(const SimpleGraph& g, const VertexSet& s);

// True iff G[S] has at most one component; the empty set counts as connected.
bool is_connected_set(const WeightedTree& g, const VertexSet& s);
bool is_connected_set(const SimpleGraph& g, const VertexSet& s);

// Safety check: wminus(C) >= wplus(D) for every component C of G[S] and every
// component D of G-S adjacent to C. The empty set is safe exactly when every
// component of G has wplus-weight 0. S need not be connected.
std::optional<SafetyViolation> find_safety_violation(const WeightedTree& tree,
                                                     const DualWeights& dw, const VertexSet& s);
std::optional<SafetyViolation> find_safety_violation(const SimpleGraph& g,
                                                     const std::vector<Weight>& wminus,
                                                     const std::vector<Weight>& wplus,
                                                     const VertexSet& s);

bool is_dual_safe(const WeightedTree& tree, const DualWeights& dw, const VertexSet& s);

// w-safety on an arbitrary simple graph (weights 1-based).
bool is_safe(const SimpleGraph& g, const std::vector<Weight>& w, const VertexSet& s);

namespace detail {

// Shared worker on a raw adjacency structure; `in_s` is a 1-based membership
// vector. Used by the oracle's subset scans to avoid re-materializing sets.
std::optional<SafetyViolation> find_safety_violation_adj(
    int n, const std::vector<std::vector<int>>& adj, const std::vector<Weight>& wminus,
    const std::vector<Weight>& wplus, const std::vector<char>& in_s);

bool is_connected_membership(int n, const std::vector<std::vector<int>>& adj,
                             const std::vector<char>& in_s, int member_count);

}  // namespace detail

}  // namespace safeset
