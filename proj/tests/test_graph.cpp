#include "doctest.h"

#include <algorithm>

#include "surfgeo/duality.hpp"
#include "surfgeo/graph.hpp"

#include "common.hpp"

using namespace surfgeo;

TEST_CASE("prism is cubic, 3-connected, cyclically 3- but not 4-arc connected") {
  Graph g = fixtures::prism();
  CHECK(is_cubic(g));
  CHECK(is_connected(g));
  CHECK(is_k_connected(g, 3));
  CHECK_FALSE(has_bridge(g));
  CHECK(is_cyclically_k_arc_connected(g, 3));

  std::vector<int> cut;
  CHECK_FALSE(is_cyclically_k_arc_connected(g, 4, &cut));
  REQUIRE(cut.size() == 3);
  // the witness cut is the three spokes {1,4},{2,5},{3,6}
  std::vector<std::pair<int, int>> arcs;
  for (int i : cut) arcs.push_back(g.arcs()[i]);
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});
}

TEST_CASE("K4 cycles: 7 simple, 4 peripheral triangles") {
  Graph g = fixtures::k4();
  auto all = simple_cycles(g);
  CHECK(all.size() == 7);
  auto periph = peripheral_cycles(g);
  CHECK(periph.size() == 4);
  for (const auto& c : periph) CHECK(c.nodes.size() == 3);
  // chordless = peripheral here: triangles only
  CHECK(chordless_cycles(g).size() == 4);
}

TEST_CASE("automorphism groups of small graphs") {
  CHECK(automorphisms(fixtures::k4()).order() == 24);
  CHECK(automorphisms(fixtures::prism()).order() == 12);
  CHECK(automorphisms(fixtures::k33()).order() == 72);
}

TEST_CASE("node set orbits in K5 minus an arc") {
  // edge graph of the double tetrahedron: K5 on 1..5 without the arc {1,5}
  std::vector<std::pair<int, int>> arcs;
  for (int u = 1; u <= 5; ++u)
    for (int v = u + 1; v <= 5; ++v)
      if (!(u == 1 && v == 5)) arcs.emplace_back(u, v);
  Graph g = Graph::from_arcs(arcs);

  // the two K4 node sets fall in one orbit: (1 5) swaps them
  auto orbits = node_set_orbits(g, {{1, 2, 3, 4}, {2, 3, 4, 5}});
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size == 2);
  CHECK(orbits[0].representative == std::vector<int>{1, 2, 3, 4});
  CHECK(orbits[0].member_indices.size() == 2);
}

TEST_CASE("cycle canonical form") {
  Cycle a = Cycle::canonical({3, 1, 2, 4});
  Cycle b = Cycle::canonical({4, 2, 1, 3});
  CHECK(a == b);
  CHECK(a.nodes.front() == 1);
  CHECK(a.nodes[1] < a.nodes.back());
}
