#include "doctest.h"

#include <algorithm>
#include <set>

#include "surfgeo/duality.hpp"
#include "surfgeo/embedding.hpp"

#include "common.hpp"

using namespace surfgeo;

TEST_CASE("K4 has exactly two cycle double covers") {
  Graph g = fixtures::k4();
  auto cdcs = enumerate_cdcs(g);
  REQUIRE(cdcs.size() == 2);

  std::multiset<std::multiset<std::size_t>> lengths;
  for (const auto& cdc : cdcs) {
    std::multiset<std::size_t> l;
    for (const auto& c : cdc) l.insert(c.nodes.size());
    lengths.insert(l);
  }
  // four triangles (tetrahedron) and three quadrilaterals (projective plane)
  CHECK(lengths == std::multiset<std::multiset<std::size_t>>{{3, 3, 3, 3}, {4, 4, 4}});

  std::multiset<SurfaceLabel> labels;
  for (const auto& cdc : cdcs) labels.insert(classify(surface_from_cycles(g, cdc)).label);
  CHECK(labels ==
        std::multiset<SurfaceLabel>{SurfaceLabel::sphere, SurfaceLabel::projective_plane});

  for (const auto& cdc : cdcs) {
    SimplicialSurface s = surface_from_cycles(g, cdc);
    if (classify(s).label == SurfaceLabel::projective_plane) {
      CHECK(euler_characteristic(s) == 1);
      CHECK_FALSE(orientation(s).has_value());
      CHECK_FALSE(is_vertex_faithful(s));
    } else {
      CHECK(is_vertex_faithful(s));
      CHECK(is_isomorphic(s, fixtures::tetrahedron()));
    }
  }
}

TEST_CASE("untwisted planar rotation of the prism traces the sphere") {
  Graph g = fixtures::prism();
  RotationSystem rot = fixtures::planar_rotation(g);
  TraceResult tr = trace_facial_walks(g, {rot, {}});
  CHECK(tr.walks.size() == 5);
  CHECK(tr.euler_characteristic == 2);
  CHECK(tr.orientable);
  CHECK(is_strong(tr.walks));
  CHECK(is_isomorphic(surface_from_cycles(g, walks_to_cover(tr.walks)),
                      fixtures::double_tetrahedron()));
}

TEST_CASE("twisting the spokes of the prism gives a non-strong embedding") {
  Graph g = fixtures::prism();
  RotationSystem rot = fixtures::planar_rotation(g);
  EmbeddingScheme scheme{rot, {}};
  for (auto [u, v] : std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}})
    scheme.twisted.insert(g.arc_index(u, v));
  TraceResult tr = trace_facial_walks(g, scheme);
  CHECK_FALSE(is_strong(tr.walks));
}

TEST_CASE("prism CDCs contain the umbrella cover of the double tetrahedron") {
  Graph g = fixtures::prism();
  auto cdcs = enumerate_cdcs(g);
  bool found = false;
  for (const auto& cdc : cdcs) {
    SimplicialSurface s = surface_from_cycles(g, cdc);
    if (classify(s).label == SurfaceLabel::sphere &&
        is_isomorphic(s, fixtures::double_tetrahedron()))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("vertex-faithful surfaces of small face graphs") {
  CHECK(enumerate_vertex_faithful_surfaces(fixtures::k4()).size() == 1);
  CHECK(enumerate_vertex_faithful_surfaces(fixtures::prism()).size() == 1);
  // K_{3,3} is triangle-free, so no vertex of degree 3 can exist:
  // no vertex-faithful surface at all
  CHECK(enumerate_vertex_faithful_surfaces(fixtures::k33()).empty());
}

TEST_CASE("face graph and rotation system of the double tetrahedron") {
  auto s = fixtures::double_tetrahedron();
  auto [fg, fmap] = face_graph(s);
  CHECK(is_cubic(fg));
  CHECK(fg.num_nodes() == 6);
  CHECK(fg.num_arcs() == 9);

  auto [eg, emap] = edge_graph(s);
  CHECK(eg.num_nodes() == 5);
  CHECK(eg.num_arcs() == 9);
  // K5 minus one arc: the two apexes (degree-3 vertices) are non-adjacent
  std::vector<int> deg3;
  for (int v : eg.nodes())
    if (eg.degree(v) == 3) deg3.push_back(v);
  REQUIRE(deg3.size() == 2);
  CHECK_FALSE(eg.has_arc(deg3[0], deg3[1]));

  RotationSystem rot = rotation_system_from_sphere(s, fg, fmap);
  TraceResult tr = trace_facial_walks(fg, {rot, {}});
  CHECK(tr.euler_characteristic == 2);
  CHECK(tr.orientable);
  // facial walk lengths = vertex degrees of the sphere
  std::multiset<std::size_t> lens;
  for (const auto& w : tr.walks) lens.insert(w.steps.size());
  CHECK(lens == std::multiset<std::size_t>{3, 3, 4, 4, 4});
  CHECK(is_isomorphic(surface_from_cycles(fg, walks_to_cover(tr.walks)), s));
}
