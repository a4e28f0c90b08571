// The two twisted arc sets on the triangular prism that re-embed the double
// tetrahedron's face graph on the projective plane, and the relabelling
// i -> i+3 (mod 6) that identifies the two results.

#include "doctest.h"

#include <set>

#include "surfgeo/embedding.hpp"
#include "surfgeo/surface.hpp"

#include "common.hpp"

using namespace surfgeo;

namespace {

const std::vector<std::pair<int, int>> T1 = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}};
const std::vector<std::pair<int, int>> T2 = {{1, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};

SimplicialSurface twist(const Graph& g, const RotationSystem& rot,
                        const std::vector<std::pair<int, int>>& arcs) {
  EmbeddingScheme scheme{rot, {}};
  for (auto [u, v] : arcs) scheme.twisted.insert(g.arc_index(u, v));
  TraceResult tr = trace_facial_walks(g, scheme);
  REQUIRE(is_strong(tr.walks));
  CHECK(tr.walks.size() == 4);
  std::multiset<std::size_t> lens;
  for (const auto& w : tr.walks) lens.insert(w.steps.size());
  CHECK(lens == std::multiset<std::size_t>{3, 5, 5, 5});
  CHECK(tr.euler_characteristic == 1);
  CHECK_FALSE(tr.orientable);
  return surface_from_cycles(g, walks_to_cover(tr.walks));
}

} // namespace

TEST_CASE("both twisted sets give the projective plane, isomorphic results") {
  Graph g = fixtures::prism();
  RotationSystem rot = fixtures::planar_rotation(g);

  SimplicialSurface s1 = twist(g, rot, T1);
  SimplicialSurface s2 = twist(g, rot, T2);
  CHECK(classify(s1).label == SurfaceLabel::projective_plane);
  CHECK(classify(s2).label == SurfaceLabel::projective_plane);
  CHECK(is_isomorphic(s1, s2));
}

TEST_CASE("the map i -> i+3 carries the first twisted set to the second") {
  Graph g = fixtures::prism();
  auto alpha = [](int v) { return v <= 3 ? v + 3 : v - 3; };
  // alpha is a graph automorphism of the prism
  for (auto [u, v] : g.arcs()) CHECK(g.has_arc(alpha(u), alpha(v)));

  std::set<std::pair<int, int>> image, t2;
  for (auto [u, v] : T1)
    image.insert({std::min(alpha(u), alpha(v)), std::max(alpha(u), alpha(v))});
  for (auto [u, v] : T2) t2.insert({u, v});
  CHECK(image == t2);
}
