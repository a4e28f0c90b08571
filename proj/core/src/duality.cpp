#include "surfgeo/duality.hpp"

#include <algorithm>
#include <map>

namespace surfgeo {

namespace {

std::pair<Graph, DualArcMap> graph_over_edges(const SimplicialSurface& s, bool faces) {
  std::map<std::pair<int, int>, int> pair_seen; // arc endpoints -> first edge
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(s.num_edges());
  for (int e = 0; e < s.num_edges(); ++e) {
    int a, b;
    if (faces) {
      a = s.face_label(s.edge_faces(e)[0]);
      b = s.face_label(s.edge_faces(e)[1]);
    } else {
      a = s.vertex_label(s.edge_vertices(e)[0]);
      b = s.vertex_label(s.edge_vertices(e)[1]);
    }
    auto key = std::minmax(a, b);
    auto [it, fresh] = pair_seen.emplace(key, e);
    if (!fresh)
      throw DomainError(std::string(faces ? "face" : "edge") + " graph would have a repeated arc: edges " +
                        std::to_string(s.edge_label(it->second)) + " and " +
                        std::to_string(s.edge_label(e)) + " join " + "{" + std::to_string(key.first) +
                        "," + std::to_string(key.second) + "}");
    arcs.emplace_back(key.first, key.second);
  }
  Graph g = Graph::from_arcs(arcs);
  DualArcMap map;
  map.arc_of_edge.resize(s.num_edges());
  map.edge_of_arc.assign(g.num_arcs(), -1);
  for (int e = 0; e < s.num_edges(); ++e) {
    int idx = g.arc_index(arcs[e].first, arcs[e].second);
    map.arc_of_edge[e] = idx;
    map.edge_of_arc[idx] = e;
  }
  return {std::move(g), std::move(map)};
}

} // namespace

std::pair<Graph, DualArcMap> face_graph(const SimplicialSurface& s) {
  return graph_over_edges(s, /*faces=*/true);
}

std::pair<Graph, DualArcMap> edge_graph(const SimplicialSurface& s) {
  return graph_over_edges(s, /*faces=*/false);
}

RotationSystem rotation_system_from_sphere(const SimplicialSurface& s, const Graph& fg,
                                           const DualArcMap& map) {
  if (classify(s).label != SurfaceLabel::sphere)
    throw DomainError("rotation system requires a simplicial sphere");
  auto sigma = orientation(s);
  if (!sigma) throw DomainError("sphere without orientation"); // cannot happen

  auto face_edge_between = [&](int f, int v1, int v2) {
    for (int e : s.face_edges(f)) {
      auto [a, b] = s.edge_vertices(e);
      if ((a == v1 && b == v2) || (a == v2 && b == v1)) return e;
    }
    throw DomainError("face misses an edge of its oriented triple");
  };

  auto build = [&](bool mirrored) {
    RotationSystem rot;
    for (int f = 0; f < s.num_faces(); ++f) {
      auto [v1, v2, v3] = (*sigma)[f];
      if (mirrored) std::swap(v2, v3);
      std::vector<int> order{map.arc_of_edge[face_edge_between(f, v1, v2)],
                             map.arc_of_edge[face_edge_between(f, v2, v3)],
                             map.arc_of_edge[face_edge_between(f, v3, v1)]};
      rot.order[s.face_label(f)] = std::move(order);
    }
    return rot;
  };

  RotationSystem a = build(false), b = build(true);
  auto encode = [](const RotationSystem& rot) {
    std::vector<int> enc;
    for (auto& [node, seq] : rot.order) {
      enc.push_back(node);
      for (int x : normalize_cyclic(seq)) enc.push_back(x);
    }
    return enc;
  };
  return encode(a) <= encode(b) ? a : b;
}

} // namespace surfgeo
