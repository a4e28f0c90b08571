#pragma once

#include <string>
#include <vector>

#include "surfgeo/duality.hpp"
#include "surfgeo/embedding.hpp"
#include "surfgeo/patterns.hpp"
#include "surfgeo/surface.hpp"

namespace surfgeo {

enum class TargetSurface { projective_plane, torus, klein_bottle };

std::string to_string(TargetSurface t);
SurfaceLabel target_label(TargetSurface t);

// One isomorphism class of re-embeddings of a vertex-faithful sphere on the
// target surface. `pattern` and `nodes` describe the subgraph of the sphere's
// edge graph whose dual arcs were twisted to produce the witness surface;
// `orbit_size` is the size of the node-set orbit under the automorphism
// group of the edge graph.
struct ReembeddingClass {
  TargetSurface target;
  std::string pattern;
  std::vector<int> nodes;
  std::size_t orbit_size = 0;
  SimplicialSurface surface;
};

// All re-embeddings of the sphere on the target, up to isomorphism,
// found by twisting the dual arcs of characteristic subgraphs of the edge
// graph. Deterministically ordered by the canonical form of the surface.
std::vector<ReembeddingClass> enumerate_reembeddings(const SimplicialSurface& sphere,
                                                     TargetSurface target);

// Number of re-embedding classes counted by orbits of characteristic-subgraph
// node sets under the automorphism group of the edge graph, pooling the node
// sets of every subgraph family for the target. A node set is counted when at
// least one subgraph on it yields a strong embedding on the target. This is
// the convention used by the reference census the `table` command reproduces;
// it can be coarser than the number of non-isomorphic witness surfaces,
// because one node-set orbit may carry several inequivalent embeddings.
std::size_t count_reembedding_orbits(const SimplicialSurface& sphere, TargetSurface target);

// Independent count of the same classes via exhaustive cycle-double-cover
// search over the face graph. Returns the witness surfaces sorted by
// canonical form.
std::vector<SimplicialSurface> oracle_reembeddings(const SimplicialSurface& sphere,
                                                   TargetSurface target,
                                                   std::size_t max_cycles = 50000);

// Waist/degree conditions that rule out any re-embedding on the target.
// Returns true when re-embeddings are provably impossible.
bool reembedding_excluded(const SimplicialSurface& sphere, TargetSurface target);

// Upper bound on the number of projective-plane classes: (|faces| - 2) / 2.
std::size_t projective_upper_bound(const SimplicialSurface& sphere);

} // namespace surfgeo
