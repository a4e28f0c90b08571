// One-off survey: for every vertex-faithful sphere up to a face budget,
// twist every subset of face-graph arcs, trace, and record the edge-graph
// subgraphs dual to the twisted sets that produce strong Klein-bottle
// embeddings. Prints the isomorphism types that are not complete bipartite
// K_{2,odd}, as arc lists in canonical labeling.

#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <algorithm>

#include "surfgeo/duality.hpp"
#include "surfgeo/embedding.hpp"
#include "surfgeo/generation.hpp"
#include "surfgeo/surface.hpp"

using namespace surfgeo;

namespace {

// Dense 0-based relabeling of the subgraph of eg spanned by the given arcs
// (isolated nodes dropped), for type classification.
struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;   // sorted (min,max)
  std::vector<int> degree_sequence;        // sorted

  bool operator==(const SmallGraph&) const = default;
};

SmallGraph extract(const Graph& eg, const std::vector<int>& arc_idx) {
  std::map<int, int> node_of;
  for (int a : arc_idx) {
    node_of.emplace(eg.arc(a).first, 0);
    node_of.emplace(eg.arc(a).second, 0);
  }
  SmallGraph sg;
  for (auto& [id, dense] : node_of) dense = sg.n++;
  std::vector<int> deg(sg.n, 0);
  for (int a : arc_idx) {
    int u = node_of[eg.arc(a).first], v = node_of[eg.arc(a).second];
    sg.arcs.emplace_back(std::min(u, v), std::max(u, v));
    ++deg[u];
    ++deg[v];
  }
  std::sort(sg.arcs.begin(), sg.arcs.end());
  sg.degree_sequence = deg;
  std::sort(sg.degree_sequence.begin(), sg.degree_sequence.end());
  return sg;
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.n != b.n || a.arcs.size() != b.arcs.size() ||
      a.degree_sequence != b.degree_sequence)
    return false;
  std::vector<std::set<int>> aa(a.n), ba(b.n);
  std::vector<int> adeg(a.n, 0), bdeg(b.n, 0);
  for (auto& [u, v] : a.arcs) { aa[u].insert(v); aa[v].insert(u); ++adeg[u]; ++adeg[v]; }
  for (auto& [u, v] : b.arcs) { ba[u].insert(v); ba[v].insert(u); ++bdeg[u]; ++bdeg[v]; }
  // map nodes of a in decreasing degree order
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return adeg[x] > adeg[y]; });
  std::vector<int> image(a.n, -1);
  std::vector<bool> used(b.n, false);
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == a.n) return true;
    int x = order[depth];
    for (int y = 0; y < b.n; ++y) {
      if (used[y] || adeg[x] != bdeg[y]) continue;
      bool ok = true;
      for (int nb : aa[x])
        if (image[nb] >= 0 && !ba[y].count(image[nb])) { ok = false; break; }
      if (ok) {
        int mapped = 0;
        for (int nb : aa[x])
          if (image[nb] >= 0) ++mapped;
        int ymapped = 0;
        for (int nb : ba[y])
          if (used[nb]) ++ymapped;
        if (mapped != ymapped) ok = false;
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      image[x] = -1;
      used[y] = false;
    }
    return false;
  };
  return dfs(dfs, 0);
}

SmallGraph k2m_graph(int m) {
  SmallGraph sg;
  sg.n = m + 2;
  for (int i = 0; i < m; ++i) {
    sg.arcs.emplace_back(0, 2 + i);
    sg.arcs.emplace_back(1, 2 + i);
  }
  std::sort(sg.arcs.begin(), sg.arcs.end());
  sg.degree_sequence.assign(m, 2);
  sg.degree_sequence.push_back(m);
  sg.degree_sequence.push_back(m);
  std::sort(sg.degree_sequence.begin(), sg.degree_sequence.end());
  return sg;
}

struct TypeInfo {
  SmallGraph graph;
  long occurrences = 0;
  int first_faces = 0;
};

} // namespace

int main(int argc, char** argv) {
  int max_faces = argc > 1 ? std::atoi(argv[1]) : 12;
  std::vector<TypeInfo> types;
  for (int n = 4; n <= max_faces; n += 2) {
    for (const auto& sphere : generate_spheres(n)) {
      auto [fg, fmap] = face_graph(sphere);
      auto [eg, emap] = edge_graph(sphere);
      RotationSystem rot = rotation_system_from_sphere(sphere, fg, fmap);
      const int na = fg.num_arcs();
      for (unsigned long mask = 1; mask < (1ul << na); ++mask) {
        EmbeddingScheme scheme;
        scheme.rotation = rot;
        for (int a = 0; a < na; ++a)
          if (mask >> a & 1) scheme.twisted.insert(a);
        TraceResult tr = trace_facial_walks(fg, scheme);
        if (tr.euler_characteristic != 0 || tr.orientable) continue;
        if (!is_strong(tr.walks)) continue;
        std::vector<int> dual;
        for (int a : scheme.twisted)
          dual.push_back(emap.arc_of_edge[fmap.edge_of_arc[a]]);
        SmallGraph sg = extract(eg, dual);
        bool found = false;
        for (auto& t : types)
          if (isomorphic(sg, t.graph)) {
            ++t.occurrences;
            found = true;
            break;
          }
        if (!found) types.push_back({std::move(sg), 1, n});
      }
    }
    std::printf("after %2d faces: %zu klein twist-subgraph types total\n", n, types.size());
    std::fflush(stdout);
  }

  int idx = 0;
  for (auto& info : types) {
    bool bip = false;
    for (int m = 1; m <= 14 && !bip; ++m) bip = isomorphic(info.graph, k2m_graph(m));
    std::printf("type %d: %s, %d nodes, first at %d faces, %ld occurrences, arcs:", ++idx,
                bip ? "K_{2,m}" : "OTHER", info.graph.n, info.first_faces, info.occurrences);
    for (auto& [u, v] : info.graph.arcs) std::printf(" {%d,%d}", u, v);
    std::printf("\n");
  }
  return 0;
}
