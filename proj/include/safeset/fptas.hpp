#pragma once

#include "safeset/graph.hpp"
#include "safeset/rational.hpp"

namespace safeset {

// Per-vertex floor/ceil of w(u)/t in exact integer arithmetic; t = p/q > 0.
DualWeights scale_weights(const WeightedTree& tree, Rational t);

// Smallest superset of `start` (grown breadth-first, ascending ids) that is a
// connected (w-,w+)-safe set. `start` must be connected; the full vertex set
// is always safe, so the growth terminates.
VertexSet extend_to_dual_safe(const WeightedTree& tree, const DualWeights& dw, VertexSet start);

struct FptasReport {
  Rational t;               // scaling parameter eps^2 * w(S1) / n
  bool exact_path = false;  // t < 1 handed the instance to the exact solver
  Weight budget = 0;        // scaled dp budget on the non-exact path
  VertexSet baseline;       // the 2-approximation S1
};

// Connected w-safe set with w(S) <= (1+3*eps+2*eps^2) * cs(T,w) + w_max,
// for instances with eps <= min{1/3, 1/M} and w_max <= M * w_min.
VertexSet fptas_solve(const WeightedTree& tree, Rational eps, long long ratio_bound,
                      FptasReport* report = nullptr);

}  // namespace safeset
