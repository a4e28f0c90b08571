#pragma once

#include <string>
#include <vector>

namespace surfgeo {

// Node-coloured undirected graph on dense ids 0..n-1. This is the input of
// the shared canonicalisation engine; plain graphs use a single colour,
// simplicial surfaces a three-coloured incidence graph.
struct ColoredGraph {
  int n = 0;
  std::vector<std::vector<int>> adj; // per node, neighbor ids (any order)
  std::vector<int> color;            // non-negative

  void add_arc(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
};

struct CanonicalResult {
  std::vector<int> labeling;  // node -> canonical position
  std::string certificate;    // relabelling-invariant byte string
  // Full automorphism group (node -> node maps, identity included).
  // Only filled when requested.
  std::vector<std::vector<int>> automorphisms;
};

// Equitable colour refinement plus individualise-refine backtracking.
// Certificates of two coloured graphs are equal iff the graphs are
// isomorphic by a colour-preserving map.
CanonicalResult canonicalize(const ColoredGraph& g, bool want_automorphisms = false);

} // namespace surfgeo
