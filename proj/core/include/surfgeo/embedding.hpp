#pragma once

#include <map>
#include <set>
#include <vector>

#include "surfgeo/graph.hpp"
#include "surfgeo/surface.hpp"

namespace surfgeo {

// Cyclic order of the incident arcs (arc indices into g.arcs()) at each node.
struct RotationSystem {
  std::map<int, std::vector<int>> order; // node id -> cyclic arc-index sequence
};

struct EmbeddingScheme {
  RotationSystem rotation;
  std::set<int> twisted; // arc indices
};

// Closed facial walk as (node, outgoing arc index) steps.
struct FacialWalk {
  std::vector<std::pair<int, int>> steps;
  std::vector<int> node_sequence() const;
};

struct TraceResult {
  std::vector<FacialWalk> walks;
  int euler_characteristic = 0;
  bool orientable = false;
};

// Signed face traversal of a connected cubic graph under the scheme.
TraceResult trace_facial_walks(const Graph& g, const EmbeddingScheme& scheme);

bool is_strong(const std::vector<FacialWalk>& walks);

using CycleDoubleCover = std::vector<Cycle>;

// All cycle double covers, canonically sorted. Refuses graphs with more than
// `max_cycles` simple cycles.
std::vector<CycleDoubleCover> enumerate_cdcs(const Graph& g, std::size_t max_cycles = 50000);

// The unique simplicial surface whose umbrellas are the cycles of the cover:
// vertices = cycles, edges = arcs, faces = nodes.
SimplicialSurface surface_from_cycles(const Graph& g, const CycleDoubleCover& cdc);

// All vertex-faithful surfaces with face graph g, up to isomorphism.
// Searches double covers by peripheral cycles only, with the pairwise
// one-arc-intersection filter.
std::vector<SimplicialSurface> enumerate_vertex_faithful_surfaces(const Graph& g,
                                                                  std::size_t max_cycles = 50000);

// Facial cycles of strong walks as a cycle double cover.
CycleDoubleCover walks_to_cover(const std::vector<FacialWalk>& walks);

} // namespace surfgeo
