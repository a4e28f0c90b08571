#include "doctest.h"

#include <algorithm>
#include <set>

#include "surfgeo/generation.hpp"
#include "surfgeo/reembed.hpp"

#include "common.hpp"

using namespace surfgeo;

TEST_CASE("double tetrahedron: P=1, T=0, K=1") {
  auto s = fixtures::double_tetrahedron();
  auto p = enumerate_reembeddings(s, TargetSurface::projective_plane);
  REQUIRE(p.size() == 1);
  CHECK(classify(p[0].surface).label == SurfaceLabel::projective_plane);
  CHECK(p[0].pattern == "K4");
  CHECK(p[0].orbit_size == 2); // the two K4 node sets form one orbit

  CHECK(enumerate_reembeddings(s, TargetSurface::torus).empty());

  auto k = enumerate_reembeddings(s, TargetSurface::klein_bottle);
  REQUIRE(k.size() == 1);
  CHECK(classify(k[0].surface).label == SurfaceLabel::klein_bottle);
  CHECK(k[0].pattern == "K2,3");
  // the unique K_{2,3}: poles = the two apexes, part = the 3-waist vertices
  CHECK(k[0].nodes == std::vector<int>{1, 2, 3, 4, 5});

  CHECK(count_reembedding_orbits(s, TargetSurface::projective_plane) == 1);
  CHECK(count_reembedding_orbits(s, TargetSurface::torus) == 0);
  CHECK(count_reembedding_orbits(s, TargetSurface::klein_bottle) == 1);
}

TEST_CASE("tetrahedron re-embeds once on the projective plane, nowhere else") {
  auto s = fixtures::tetrahedron();
  CHECK(enumerate_reembeddings(s, TargetSurface::projective_plane).size() == 1);
  CHECK(enumerate_reembeddings(s, TargetSurface::torus).empty());
  CHECK(enumerate_reembeddings(s, TargetSurface::klein_bottle).empty());
}

TEST_CASE("octahedron: projective excluded; torus shows orbits coarser than classes") {
  auto s = fixtures::octahedron();
  // all vertex degrees even: projective excluded
  CHECK(reembedding_excluded(s, TargetSurface::projective_plane));
  CHECK(enumerate_reembeddings(s, TargetSurface::projective_plane).empty());

  // three non-isomorphic torus surfaces, but the K_{2,2,2} node set coincides
  // with the K_{2,4} node sets, so only two node-set orbits are counted
  CHECK(enumerate_reembeddings(s, TargetSurface::torus).size() == 3);
  CHECK(count_reembedding_orbits(s, TargetSurface::torus) == 2);

  CHECK(enumerate_reembeddings(s, TargetSurface::klein_bottle).size() == 2);
  CHECK(count_reembedding_orbits(s, TargetSurface::klein_bottle) == 2);
}

TEST_CASE("pipeline matches the exhaustive oracle at 10 faces") {
  for (const auto& s : generate_spheres(10)) {
    for (TargetSurface t : {TargetSurface::projective_plane, TargetSurface::torus,
                            TargetSurface::klein_bottle}) {
      std::set<std::string> pipeline;
      for (const auto& c : enumerate_reembeddings(s, t))
        pipeline.insert(canonical_form(c.surface));
      std::set<std::string> oracle;
      for (const auto& w : oracle_reembeddings(s, t)) oracle.insert(canonical_form(w));
      CHECK(pipeline == oracle);
    }
  }
}

TEST_CASE("prefilter soundness at 12 faces") {
  for (const auto& s : generate_spheres(12)) {
    for (TargetSurface t : {TargetSurface::projective_plane, TargetSurface::torus,
                            TargetSurface::klein_bottle}) {
      if (reembedding_excluded(s, t)) CHECK(enumerate_reembeddings(s, t).empty());
    }
  }
}

TEST_CASE("projective class count respects the (n-2)/2 bound") {
  for (int n = 4; n <= 12; n += 2)
    for (const auto& s : generate_spheres(n)) {
      CHECK(enumerate_reembeddings(s, TargetSurface::projective_plane).size() <=
            projective_upper_bound(s));
    }
}

TEST_CASE("re-embedding rejects non-spheres and non-vertex-faithful input") {
  auto s = fixtures::double_tetrahedron();
  auto k = enumerate_reembeddings(s, TargetSurface::klein_bottle);
  REQUIRE(k.size() == 1);
  CHECK_THROWS_AS(enumerate_reembeddings(k[0].surface, TargetSurface::torus), DomainError);
}
