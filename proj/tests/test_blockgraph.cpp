#include "doctest.h"
#include "safeset/blockgraph.hpp"
#include "safeset/oracle.hpp"
#include "safeset/verify.hpp"
#include "test_util.hpp"

using namespace safeset;

namespace {

std::vector<Weight> unit(int n) { return std::vector<Weight>(n + 1, 1); }

}  // namespace

TEST_CASE("block_decomposition on fixtures") {
  SimpleGraph k3 = SimpleGraph::build(3, {{1, 2}, {1, 3}, {2, 3}});
  BlockDecomposition d = block_decomposition(k3);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0] == VertexSet{1, 2, 3});
  CHECK(d.cut_vertices.empty());
  CHECK(d.omega == 3);

  SimpleGraph p3 = SimpleGraph::build(3, {{1, 2}, {2, 3}});
  d = block_decomposition(p3);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0] == VertexSet{1, 2});
  CHECK(d.blocks[1] == VertexSet{2, 3});
  CHECK(d.cut_vertices == VertexSet{2});
  CHECK(d.omega == 2);

  SimpleGraph single = SimpleGraph::build(1, {});
  d = block_decomposition(single);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.omega == 1);
}

TEST_CASE("block_decomposition rejects bad inputs") {
  SimpleGraph c4 = SimpleGraph::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  bool threw = false;
  try {
    (void)block_decomposition(c4);
  } catch (const Error& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::NotBlockGraph);
  }
  CHECK(threw);

  SimpleGraph split = SimpleGraph::build(4, {{1, 2}, {3, 4}});
  try {
    (void)block_decomposition(split);
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConnected);
  }
}

TEST_CASE("block-cut structure is a tree and cut vertices span >= 2 blocks") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SimpleGraph g = testutil::sample_block_graph(seed * 709, 12);
    BlockDecomposition d = block_decomposition(g);
    int nodes = static_cast<int>(d.blocks.size()) + d.cut_vertices.size();
    CHECK(static_cast<int>(d.block_cut_edges.size()) == nodes - 1);
    for (int c : d.cut_vertices) {
      int touching = 0;
      for (const auto& b : d.blocks)
        if (b.contains(c)) ++touching;
      CHECK(touching >= 2);
    }
    Weight total = 0;
    for (const auto& b : d.blocks) total += b.size();
    // Every non-cut vertex in one block; each cut vertex once per block.
    CHECK(total == g.n() + static_cast<Weight>(d.block_cut_edges.size()) -
                       static_cast<Weight>(d.cut_vertices.size()));
  }
}

TEST_CASE("endblock_count") {
  SimpleGraph star = SimpleGraph::build(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(endblock_count(star) == 3);
  SimpleGraph p5 = SimpleGraph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(endblock_count(p5) == 2);
  SimpleGraph k4 = SimpleGraph::build(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(endblock_count(k4) == 1);
}

TEST_CASE("safe_upper_construct on fixtures") {
  SimpleGraph k3 = SimpleGraph::build(3, {{1, 2}, {1, 3}, {2, 3}});
  BlockBoundReport report;
  VertexSet s = safe_upper_construct(k3, &report);
  CHECK(s.size() == 2);
  CHECK(report.used_max_block_branch);
  CHECK(report.bound == 2);

  SimpleGraph p3 = SimpleGraph::build(3, {{1, 2}, {2, 3}});
  s = safe_upper_construct(p3, &report);
  CHECK(s == VertexSet{2});
  CHECK_FALSE(report.used_max_block_branch);

  // K5 plus a pendant vertex: branch A takes 3 vertices of the K5 including
  // the attachment cut vertex.
  SimpleGraph k5p = SimpleGraph::build(
      6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {1, 6}});
  s = safe_upper_construct(k5p, &report);
  CHECK(report.used_max_block_branch);
  CHECK(s.size() == 3);
  CHECK(s.contains(1));  // the cut vertex
  for (int v : s) CHECK(v <= 5);
  CHECK(is_safe(k5p, unit(6), s));
}

TEST_CASE("branch A output structure on clique-heavy graphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed * 887);
    int big = 6 + static_cast<int>(rng.next_below(4));
    SimpleGraph g = random_block_graph({big, 2}, rng.next());
    BlockDecomposition d = block_decomposition(g);
    BlockBoundReport report;
    VertexSet s = safe_upper_construct(g, &report);
    if (!report.used_max_block_branch) continue;
    CHECK(s.size() == (d.omega + 1) / 2);
    const VertexSet* host = nullptr;
    for (const auto& b : d.blocks)
      if (b.size() == d.omega) {
        host = &b;
        break;
      }
    REQUIRE(host != nullptr);
    for (int v : s) CHECK(host->contains(v));
    for (int c : d.cut_vertices)
      if (host->contains(c)) CHECK(s.contains(c));
  }
}

TEST_CASE("construction meets the bound and the brute force agrees") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SimpleGraph g = testutil::sample_block_graph(seed * 53, 12);
    BlockDecomposition d = block_decomposition(g);
    int bound = std::max((g.n() + 2) / 3, (d.omega + 1) / 2);

    auto brute = brute_connected_safe_min(g, unit(g.n()));
    CHECK(brute.weight <= bound);

    BlockBoundReport report;
    VertexSet s = safe_upper_construct(g, &report);
    CHECK(report.bound == bound);
    CHECK(static_cast<int>(s.size()) <= bound);
    CHECK(is_connected_set(g, s));
    CHECK(is_safe(g, unit(g.n()), s));
  }
}
