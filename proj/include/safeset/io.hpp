#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

// Instance text format. '#' lines are comments; single-space tokens, LF ends.
//   tree <n>    then n lines "node <id> <w>"        then n-1 "edge <u> <v>"
//   dtree <n>   then n lines "node <id> <w-> <w+>"  then n-1 "edge <u> <v>"
//   graph <n> <m> then n lines "node <id> <w>"      then m   "edge <u> <v>"
struct TreeInstance {
  WeightedTree tree;
};
struct DualTreeInstance {
  WeightedTree tree;  // carries w- as its weight map
  DualWeights weights;
};
struct GraphInstance {
  SimpleGraph graph;
  std::vector<Weight> weights;  // 1-based
};
using Instance = std::variant<TreeInstance, DualTreeInstance, GraphInstance>;

Instance parse_instance(std::string_view text);

std::string write_instance(const WeightedTree& tree,
                           const std::vector<std::string>& header_comments = {});
std::string write_instance(const WeightedTree& tree, const DualWeights& dw,
                           const std::vector<std::string>& header_comments = {});
std::string write_instance(const SimpleGraph& graph, const std::vector<Weight>& weights,
                           const std::vector<std::string>& header_comments = {});

// "safeset weight=<W> size=<k> vertices=<id,...>" (ids ascending, empty field
// for the empty set). weights is 1-based.
std::string write_solution(const VertexSet& set, const std::vector<Weight>& weights);

int instance_n(const Instance& inst);
std::vector<Weight> instance_objective_weights(const Instance& inst);  // w or w-, 1-based

}  // namespace safeset
