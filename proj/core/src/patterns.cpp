#include "surfgeo/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace surfgeo {

PatternGraph pattern_k4() {
  return {"K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {}};
}

PatternGraph pattern_k222() {
  // octahedron graph, partition sets {0,1}, {2,3}, {4,5}
  PatternGraph p{"K222", 6, {}, {}};
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u / 2 == v / 2)) p.arcs.emplace_back(u, v);
  return p;
}

PatternGraph pattern_k2m(int m) {
  if (m < 1) throw DomainError("K_{2,m} needs m >= 1");
  PatternGraph p{"K2," + std::to_string(m), m + 2, {}, {{0, 1}}};
  for (int i = 0; i < m; ++i) {
    p.arcs.emplace_back(0, 2 + i);
    p.arcs.emplace_back(1, 2 + i);
  }
  if (m == 2) p.nonadjacent.emplace_back(2, 3);
  return p;
}

PatternGraph pattern_two_k4_shared_pair() {
  // two copies of K4 minus an arc, glued along the endpoints {0,1} of the
  // missing arc
  return {"2K4-shared-pair",
          6,
          {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}},
          {},
          false};
}

PatternGraph pattern_two_k4_shared_node() {
  // K4 on {0,1,2,3} and K4 on {0,4,5,6} sharing node 0
  return {"2K4-shared-node",
          7,
          {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
           {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}},
          {},
          false};
}

PatternGraph pattern_two_k4_disjoint() {
  return {"2K4-disjoint",
          8,
          {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
           {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
          {},
          false};
}

namespace {

std::vector<PatternMatch> generic_matches(const Graph& g, const PatternGraph& p) {
  const int k = p.num_nodes;
  std::vector<std::vector<int>> tadj(k);
  std::vector<int> tdeg(k, 0);
  for (auto& [u, v] : p.arcs) {
    tadj[u].push_back(v);
    tadj[v].push_back(u);
    ++tdeg[u];
    ++tdeg[v];
  }
  // match order: highest degree first, then by connectivity to placed nodes
  std::vector<int> order;
  std::vector<bool> placed(k, false);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int t = 0; t < k; ++t) {
      if (placed[t]) continue;
      int links = 0;
      for (int u : tadj[t])
        if (placed[u]) ++links;
      if (links > best_links || (links == best_links && tdeg[t] > best_deg)) {
        best = t;
        best_links = links;
        best_deg = tdeg[t];
      }
    }
    order.push_back(best);
    placed[best] = true;
  }

  std::set<std::vector<int>> seen_arc_sets;
  std::vector<PatternMatch> out;
  std::vector<int> image(k, -1);
  std::set<int> used;

  auto record = [&]() {
    std::vector<int> arcs;
    for (auto& [u, v] : p.arcs) arcs.push_back(g.arc_index(image[u], image[v]));
    std::sort(arcs.begin(), arcs.end());
    if (!seen_arc_sets.insert(arcs).second) return;
    std::vector<int> nodes(image.begin(), image.end());
    std::sort(nodes.begin(), nodes.end());
    out.push_back({std::move(nodes), std::move(arcs)});
  };

  auto ok_here = [&](int t, int host) {
    if (g.degree(host) < tdeg[t]) return false;
    for (int u : tadj[t])
      if (image[u] >= 0 && !g.has_arc(host, image[u])) return false;
    for (auto& [a, b] : p.nonadjacent) {
      int other = (a == t) ? b : (b == t) ? a : -1;
      if (other >= 0 && image[other] >= 0 && g.has_arc(host, image[other])) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      record();
      return;
    }
    int t = order[depth];
    for (int host : g.nodes()) {
      if (used.count(host) || !ok_here(t, host)) continue;
      image[t] = host;
      used.insert(host);
      self(self, depth + 1);
      used.erase(host);
      image[t] = -1;
    }
  };
  dfs(dfs, 0);
  return out;
}

// K_{2,m} without template-automorphism blowup: pick the non-adjacent 2-part,
// then any m common neighbors.
std::vector<PatternMatch> k2m_matches(const Graph& g, int m) {
  std::set<std::vector<int>> seen_arc_sets;
  std::vector<PatternMatch> out;
  const auto& nodes = g.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      int a = nodes[i], b = nodes[j];
      if (g.has_arc(a, b)) continue;
      std::vector<int> common;
      for (int w : g.neighbors(a))
        if (g.has_arc(b, w)) common.push_back(w);
      if (static_cast<int>(common.size()) < m) continue;
      std::vector<int> pick(m);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<int> part;
        for (int idx : pick) part.push_back(common[idx]);
        bool ok = true;
        if (m == 2 && g.has_arc(part[0], part[1])) ok = false; // both 2-parts non-adjacent
        if (ok) {
          std::vector<int> arcs;
          for (int w : part) {
            arcs.push_back(g.arc_index(a, w));
            arcs.push_back(g.arc_index(b, w));
          }
          std::sort(arcs.begin(), arcs.end());
          if (seen_arc_sets.insert(arcs).second) {
            std::vector<int> ns = part;
            ns.push_back(a);
            ns.push_back(b);
            std::sort(ns.begin(), ns.end());
            out.push_back({std::move(ns), std::move(arcs)});
          }
        }
        // next m-combination
        int pos = m - 1;
        while (pos >= 0 && pick[pos] == static_cast<int>(common.size()) - m + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int q = pos + 1; q < m; ++q) pick[q] = pick[q - 1] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PatternMatch& x, const PatternMatch& y) { return x.arc_indices < y.arc_indices; });
  return out;
}

} // namespace

std::vector<PatternMatch> find_pattern_subgraphs(const Graph& g, const PatternGraph& p) {
  if (p.name.rfind("K2,", 0) == 0) {
    return k2m_matches(g, p.num_nodes - 2);
  }
  auto out = generic_matches(g, p);
  std::sort(out.begin(), out.end(),
            [](const PatternMatch& x, const PatternMatch& y) { return x.arc_indices < y.arc_indices; });
  return out;
}

} // namespace surfgeo
