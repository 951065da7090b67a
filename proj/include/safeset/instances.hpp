#pragma once

#include <cstdint>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

// Counter-based PRNG (splitmix64) with a frozen algorithm, so fixtures and
// benchmarks reproduce bit-exactly across toolchains. Bounded draws reduce
// the raw 64-bit output modulo the range.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }  // bound > 0

 private:
  std::uint64_t state_;
};

inline constexpr const char* kGeneratorName = "splitmix64-v1";

// Uniform labeled tree (Pruefer decode) with weights uniform in [w_min, w_max].
WeightedTree random_tree(int n, std::uint64_t seed, Weight w_max, Weight w_min = 0);

// Star of order |c|+2: center of weight 1, leaves weighted c_1..c_n and K+1.
// Requires max c < K < sum c and 2*min c >= max c.
WeightedTree subset_sum_star(const std::vector<Weight>& c, Weight k);

// Cliques of the given sizes glued along randomly chosen existing vertices;
// validated as a connected block graph before returning.
SimpleGraph random_block_graph(const std::vector<int>& block_sizes, std::uint64_t seed);

// Same topology, weights uniform in [base, M*base] (so w_max <= M * w_min).
WeightedTree ratio_bounded_weights(const WeightedTree& tree, long long ratio_bound,
                                   std::uint64_t seed, Weight base);

}  // namespace safeset
