#pragma once

#include <utility>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

// Blocks (maximal 2-connected pieces plus bridge edges) of a connected block
// graph, its cut vertices, and the bipartite block-cut tree.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // ordered by (min vertex, size)
  VertexSet cut_vertices;
  std::vector<std::pair<int, int>> block_cut_edges;  // (block index, cut vertex)
  int omega = 0;                                     // largest block order
};

// Validates connectivity and that every block induces a clique.
BlockDecomposition block_decomposition(const SimpleGraph& g);

// Number of blocks containing at most one cut vertex.
int endblock_count(const SimpleGraph& g);

struct BlockBoundReport {
  bool used_max_block_branch = false;  // the ceil(omega/2)-inside-one-block branch
  int omega = 0;
  int bound = 0;  // max{ceil(n/3), ceil(omega/2)}
};

// Connected safe set (unweighted) of size at most max{ceil(n/3),
// ceil(omega/2)}. Raises SearchStalled if the local search cannot certify a
// set within the bound (diagnostic; unreachable on valid block graphs).
VertexSet safe_upper_construct(const SimpleGraph& g, BlockBoundReport* report = nullptr);

}  // namespace safeset
