#pragma once

#include <vector>

#include "surfgeo/embedding.hpp"
#include "surfgeo/graph.hpp"
#include "surfgeo/surface.hpp"

namespace surfgeo {

// Arc correspondence between a surface graph and the surface's edges:
// both the face graph and the edge graph carry one arc per surface edge.
struct DualArcMap {
  std::vector<int> arc_of_edge;  // surface edge index -> arc index in the graph
  std::vector<int> edge_of_arc;  // arc index -> surface edge index
};

// Face graph: nodes = face labels, one arc per surface edge.
std::pair<Graph, DualArcMap> face_graph(const SimplicialSurface& s);

// Edge graph: nodes = vertex labels, one arc per surface edge.
std::pair<Graph, DualArcMap> edge_graph(const SimplicialSurface& s);

// Rotation system of the face graph of a vertex-faithful sphere, fixed by the
// sphere's own orientation (the one with the smaller canonical encoding).
// Tracing it with no twisted arcs reproduces the umbrellas of the sphere.
RotationSystem rotation_system_from_sphere(const SimplicialSurface& s, const Graph& fg,
                                           const DualArcMap& map);

} // namespace surfgeo
