#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfgeo/graph.hpp"

namespace surfgeo {

// Fixed subgraph template on nodes 0..num_nodes-1, plus pairs that must be
// NON-adjacent in the host graph (used for the size-2 partition sets of the
// complete bipartite patterns). `guaranteed` marks templates whose matches
// always produce the expected surface; matches of the others are verified by
// tracing before they count.
struct PatternGraph {
  std::string name;
  int num_nodes = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::pair<int, int>> nonadjacent;
  bool guaranteed = true;
};

PatternGraph pattern_k4();
PatternGraph pattern_k222();
PatternGraph pattern_k2m(int m); // complete bipartite K_{2,m}, m >= 1

// The three ways to merge two K4s: glued along a (non-adjacent) node pair
// with both copies missing that arc, glued at a single node, and disjoint.
PatternGraph pattern_two_k4_shared_pair();
PatternGraph pattern_two_k4_shared_node();
PatternGraph pattern_two_k4_disjoint();

struct PatternMatch {
  std::vector<int> nodes;        // sorted host node ids
  std::vector<int> arc_indices;  // sorted host arc indices of the subgraph
};

// All subgraphs of g isomorphic to the template (arc subsets, not necessarily
// induced), honouring the non-adjacency constraints. Deduplicated by arc set.
std::vector<PatternMatch> find_pattern_subgraphs(const Graph& g, const PatternGraph& p);

} // namespace surfgeo
