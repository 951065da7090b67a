#include "safeset/fptas.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "safeset/approx2.hpp"
#include "safeset/exact_dp.hpp"
#include "safeset/verify.hpp"

namespace safeset {

DualWeights scale_weights(const WeightedTree& tree, Rational t) {
  if (!t.is_positive()) throw Error(ErrorKind::BadRange, "scale parameter must be positive");
  // w(u)/t = w(u) * den / num.
  std::vector<Weight> lo(tree.n()), hi(tree.n());
  for (int v = 1; v <= tree.n(); ++v) {
    lo[v - 1] = floor_mul_div(tree.weight(v), t.den(), t.num());
    hi[v - 1] = ceil_mul_div(tree.weight(v), t.den(), t.num());
  }
  return DualWeights::build(lo, hi);
}

VertexSet extend_to_dual_safe(const WeightedTree& tree, const DualWeights& dw, VertexSet start) {
  if (is_dual_safe(tree, dw, start)) return start;
  assert(!start.empty());  // caller provides a non-empty connected seed
  assert(is_connected_set(tree, start));
  std::vector<char> in(tree.n() + 1, 0);
  for (int v : start) in[v] = 1;
  // Layered breadth-first growth, ascending ids within each layer, checking
  // safety after every single addition.
  std::vector<int> frontier(start.members());
  while (!frontier.empty()) {
    std::vector<int> layer;
    for (int v : frontier)
      for (int u : tree.neighbors(v))
        if (!in[u]) {
          in[u] = 1;
          layer.push_back(u);
        }
    std::sort(layer.begin(), layer.end());
    for (int v : layer) {
      start.add(v);
      if (is_dual_safe(tree, dw, start)) return start;
    }
    frontier = std::move(layer);
  }
  // V(T) is always dual-safe, so the loop above must have returned.
  throw Error(ErrorKind::NotExtensible, "extension reached V(T) without finding a safe set");
}

VertexSet fptas_solve(const WeightedTree& tree, Rational eps, long long ratio_bound,
                      FptasReport* report) {
  if (!eps.is_positive()) throw Error(ErrorKind::BadRange, "epsilon must be positive");
  if (ratio_bound < 1) throw Error(ErrorKind::BadRange, "ratio bound M must be >= 1");
  const long long p = eps.num(), q = eps.den();

  // Precondition (i): eps <= min{1/3, 1/M}.
  if (3 * p > q || ratio_bound * p > q)
    throw Error(ErrorKind::PreconditionViolated,
                "(i) requires eps <= min{1/3, 1/M}; got eps = " + eps.str() +
                    ", M = " + std::to_string(ratio_bound));
  // Precondition (ii): w_max <= M * w_min.
  Weight wmax = 0, wmin = tree.weight(1);
  for (int v = 1; v <= tree.n(); ++v) {
    wmax = std::max(wmax, tree.weight(v));
    wmin = std::min(wmin, tree.weight(v));
  }
  if (wmax > ratio_bound * wmin)
    throw Error(ErrorKind::PreconditionViolated,
                "(ii) requires w_max <= M * w_min; got w_max = " + std::to_string(wmax) +
                    ", w_min = " + std::to_string(wmin) + ", M = " + std::to_string(ratio_bound));

  FptasReport local;
  FptasReport& rep = report ? *report : local;
  rep = FptasReport{};

  if (tree.total_weight() == 0) return VertexSet{};

  VertexSet baseline = two_approx(tree);
  Weight w_s1 = baseline.weight(tree.weights());
  rep.baseline = baseline;

  // t = eps^2 * w(S1) / n.
  Rational t = make_rational_128(static_cast<__int128>(p) * p * w_s1,
                                 static_cast<__int128>(q) * q * tree.n());
  rep.t = t;

  if (t < Rational(1, 1)) {
    rep.exact_path = true;
    auto sol = solve_exact(tree, DualWeights::uniform(tree), w_s1);
    assert(sol.has_value());
    return sol->set;
  }

  DualWeights scaled = scale_weights(tree, t);
  for (int v = 1; v <= tree.n(); ++v) {
    assert(scaled.minus(v) <= scaled.plus(v));
    // Rounding bounds from the ratio precondition, in exact rationals:
    // (1-eps) * w(u)/t <= w-(u) and w+(u) <= (1+eps) * w(u)/t.
    __int128 w_over_t_num = static_cast<__int128>(tree.weight(v)) * t.den();
    assert(static_cast<__int128>(q - p) * w_over_t_num <=
           static_cast<__int128>(q) * t.num() * scaled.minus(v));
    assert(static_cast<__int128>(q + p) * w_over_t_num >=
           static_cast<__int128>(q) * t.num() * scaled.plus(v));
  }

  // Budget: the scaled weight of the baseline extended to scaled safety. The
  // analytic ceiling (1+3eps+M)*n/eps^2 is only a sanity bound on it.
  VertexSet extended = extend_to_dual_safe(tree, scaled, baseline);
  Weight budget = extended.weight(scaled.minus_weights());
  assert(static_cast<__int128>(budget) * p * p <=
         static_cast<__int128>(tree.n()) * (static_cast<__int128>(q) * q + 3 * p * q +
                                            static_cast<__int128>(ratio_bound) * q * q));
  rep.budget = budget;

  auto sol = solve_exact(tree, scaled, budget);
  assert(sol.has_value());  // the extended baseline certifies the budget
  assert(is_dual_safe(tree, DualWeights::uniform(tree), sol->set));
  return sol->set;
}

}  // namespace safeset
