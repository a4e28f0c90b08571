#pragma once

#include <array>
#include <vector>

#include "surfgeo/embedding.hpp"
#include "surfgeo/graph.hpp"
#include "surfgeo/surface.hpp"

namespace fixtures {

inline surfgeo::SimplicialSurface tetrahedron() {
  return surfgeo::SimplicialSurface::build_from_faces(
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

inline surfgeo::SimplicialSurface double_tetrahedron() {
  return surfgeo::SimplicialSurface::build_from_faces(
      {{1, 2, 3}, {1, 3, 4}, {1, 2, 4}, {2, 3, 5}, {3, 4, 5}, {2, 4, 5}});
}

inline surfgeo::SimplicialSurface octahedron() {
  return surfgeo::SimplicialSurface::build_from_faces({{1, 2, 3},
                                                       {1, 3, 4},
                                                       {1, 4, 5},
                                                       {1, 2, 5},
                                                       {2, 3, 6},
                                                       {3, 4, 6},
                                                       {4, 5, 6},
                                                       {2, 5, 6}});
}

inline surfgeo::Graph k4() {
  return surfgeo::Graph::from_arcs({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline surfgeo::Graph k33() {
  return surfgeo::Graph::from_arcs(
      {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
}

// Triangular prism: outer triangle 1,2,3, inner triangle 4,5,6, spokes i-(i+3).
inline surfgeo::Graph prism() {
  return surfgeo::Graph::from_arcs(
      {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}});
}

// First rotation system (in lexicographic order of the per-node choices)
// whose untwisted trace is a sphere. Only sensible for planar cubic graphs.
inline surfgeo::RotationSystem planar_rotation(const surfgeo::Graph& g) {
  using namespace surfgeo;
  std::vector<std::vector<int>> arcs_at(g.num_nodes());
  for (int i = 0; i < g.num_arcs(); ++i) {
    auto [u, v] = g.arcs()[i];
    arcs_at[g.node_index(u)].push_back(i);
    arcs_at[g.node_index(v)].push_back(i);
  }
  const int n = g.num_nodes();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RotationSystem rot;
    for (int i = 0; i < n; ++i) {
      std::vector<int> order = arcs_at[i];
      if (mask >> i & 1) std::swap(order[1], order[2]);
      rot.order[g.nodes()[i]] = order;
    }
    TraceResult tr = trace_facial_walks(g, {rot, {}});
    if (tr.orientable && tr.euler_characteristic == 2) return rot;
  }
  throw DomainError("no planar rotation found");
}

} // namespace fixtures
