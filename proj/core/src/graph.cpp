#include "surfgeo/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "surfgeo/canonical.hpp"

namespace surfgeo {

Graph Graph::from_arcs(std::vector<std::pair<int, int>> arcs) {
  Graph g;
  for (auto& [u, v] : arcs) {
    if (u == v) throw DomainError("loop arc {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u > v) std::swap(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw DomainError("repeated arc");
  g.arcs_ = std::move(arcs);
  std::set<int> nodes;
  for (auto& [u, v] : g.arcs_) {
    nodes.insert(u);
    nodes.insert(v);
  }
  g.nodes_.assign(nodes.begin(), nodes.end());
  g.adj_.resize(g.nodes_.size());
  for (auto& [u, v] : g.arcs_) {
    g.adj_[g.node_index(u)].push_back(v);
    g.adj_[g.node_index(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

bool Graph::has_node(int v) const { return node_index(v) >= 0; }

int Graph::node_index(int v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return -1;
  return static_cast<int>(it - nodes_.begin());
}

const std::vector<int>& Graph::neighbors(int v) const {
  int i = node_index(v);
  if (i < 0) throw DomainError("unknown node " + std::to_string(v));
  return adj_[i];
}

int Graph::arc_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
  if (it == arcs_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - arcs_.begin());
}

Graph Graph::without_arcs(const std::vector<int>& arc_indices) const {
  std::set<int> drop(arc_indices.begin(), arc_indices.end());
  std::vector<std::pair<int, int>> kept;
  for (int i = 0; i < num_arcs(); ++i)
    if (!drop.count(i)) kept.push_back(arcs_[i]);
  Graph g = from_arcs(std::move(kept));
  // keep isolated nodes so component accounting stays honest
  std::set<int> nodes(g.nodes_.begin(), g.nodes_.end());
  for (int v : nodes_) {
    if (!nodes.count(v)) {
      g.nodes_.insert(std::lower_bound(g.nodes_.begin(), g.nodes_.end(), v), v);
    }
  }
  g.adj_.assign(g.nodes_.size(), {});
  for (auto& [u, v] : g.arcs_) {
    g.adj_[g.node_index(u)].push_back(v);
    g.adj_[g.node_index(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

Graph Graph::without_nodes(const std::vector<int>& node_ids) const {
  std::set<int> drop(node_ids.begin(), node_ids.end());
  std::vector<std::pair<int, int>> kept;
  for (auto& [u, v] : arcs_)
    if (!drop.count(u) && !drop.count(v)) kept.emplace_back(u, v);
  Graph g = from_arcs(std::move(kept));
  std::set<int> present(g.nodes_.begin(), g.nodes_.end());
  for (int v : nodes_) {
    if (!drop.count(v) && !present.count(v)) {
      g.nodes_.insert(std::lower_bound(g.nodes_.begin(), g.nodes_.end(), v), v);
    }
  }
  g.adj_.assign(g.nodes_.size(), {});
  for (auto& [u, v] : g.arcs_) {
    g.adj_[g.node_index(u)].push_back(v);
    g.adj_[g.node_index(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

Cycle Cycle::canonical(std::vector<int> nodes) {
  if (nodes.size() < 3) throw DomainError("cycle shorter than 3");
  auto min_it = std::min_element(nodes.begin(), nodes.end());
  std::rotate(nodes.begin(), min_it, nodes.end());
  if (nodes[1] > nodes.back()) {
    std::reverse(nodes.begin() + 1, nodes.end());
  }
  return Cycle{std::move(nodes)};
}

bool Cycle::operator<(const Cycle& o) const {
  if (nodes.size() != o.nodes.size()) return nodes.size() < o.nodes.size();
  return nodes < o.nodes;
}

std::vector<int> Cycle::arc_indices(const Graph& g) const {
  std::vector<int> idx;
  idx.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    int a = g.arc_index(nodes[i], nodes[(i + 1) % nodes.size()]);
    if (a < 0) throw DomainError("cycle uses missing arc");
    idx.push_back(a);
  }
  return idx;
}

bool is_cubic(const Graph& g) {
  for (int v : g.nodes())
    if (g.degree(v) != 3) return false;
  return g.num_nodes() > 0;
}

namespace {

// connected components as node-id lists
std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : g.nodes()) {
    if (seen.count(start)) continue;
    std::vector<int> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool component_has_cycle(const Graph& g, const std::vector<int>& comp) {
  std::set<int> in(comp.begin(), comp.end());
  int arcs = 0;
  for (auto& [u, v] : g.arcs())
    if (in.count(u) && in.count(v)) ++arcs;
  return arcs >= static_cast<int>(comp.size());
}

// all k-subsets of 0..n-1, invoking f(subset); f returns true to stop
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) return f(idx);
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return true;
  return components(g).size() == 1;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw DomainError("k-connectivity only for k in {1,2,3}");
  if (g.num_nodes() <= k) return false;
  for (int s = 0; s < k; ++s) {
    bool bad = for_each_subset(g.num_nodes(), s, [&](const std::vector<int>& idx) {
      std::vector<int> drop;
      for (int i : idx) drop.push_back(g.nodes()[i]);
      return !is_connected(g.without_nodes(drop));
    });
    if (bad) return false;
  }
  return true;
}

bool has_bridge(const Graph& g) {
  auto base = components(g).size();
  for (int i = 0; i < g.num_arcs(); ++i) {
    if (components(g.without_arcs({i})).size() > base) return true;
  }
  return false;
}

bool is_cyclically_k_arc_connected(const Graph& g, int k, std::vector<int>* witness_cut) {
  if (k < 1) throw DomainError("cyclic arc connectivity needs k >= 1");
  for (int s = 0; s <= k - 1; ++s) {
    std::vector<int> found;
    bool bad = for_each_subset(g.num_arcs(), s, [&](const std::vector<int>& idx) {
      Graph h = g.without_arcs(idx);
      int cyclic = 0;
      for (auto& comp : components(h))
        if (component_has_cycle(h, comp)) ++cyclic;
      if (cyclic >= 2) {
        found = idx;
        return true;
      }
      return false;
    });
    if (bad) {
      if (witness_cut) *witness_cut = found;
      return false;
    }
  }
  return true;
}

std::vector<Cycle> simple_cycles(const Graph& g, std::size_t limit) {
  std::vector<Cycle> out;
  std::vector<int> path;
  std::set<int> on_path;

  // Cycles are rooted at their minimum node; the second node must be smaller
  // than the last so each cycle is produced exactly once.
  auto dfs = [&](auto&& self, int root, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < path.back()) {
          out.push_back(Cycle::canonical(path));
          if (out.size() > limit)
            throw DomainError("cycle enumeration exceeded limit of " + std::to_string(limit));
        }
        continue;
      }
      if (w <= root || on_path.count(w)) continue;
      path.push_back(w);
      on_path.insert(w);
      self(self, root, w);
      path.pop_back();
      on_path.erase(w);
    }
  };

  for (int root : g.nodes()) {
    path = {root};
    on_path = {root};
    dfs(dfs, root, root);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_chordless(const Graph& g, const Cycle& c) {
  const auto& ns = c.nodes;
  const int n = static_cast<int>(ns.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (!consecutive && g.has_arc(ns[i], ns[j])) return false;
    }
  }
  return true;
}

bool is_peripheral(const Graph& g, const Cycle& c) {
  if (!is_chordless(g, c)) return false;
  Graph rest = g.without_nodes(c.nodes);
  return is_connected(rest);
}

std::vector<Cycle> chordless_cycles(const Graph& g, std::size_t limit) {
  std::vector<Cycle> out;
  for (auto& c : simple_cycles(g, limit))
    if (is_chordless(g, c)) out.push_back(c);
  return out;
}

std::vector<Cycle> peripheral_cycles(const Graph& g, std::size_t limit) {
  std::vector<Cycle> out;
  for (auto& c : simple_cycles(g, limit))
    if (is_peripheral(g, c)) out.push_back(c);
  return out;
}

int AutomorphismGroup::image(std::size_t element, int node) const {
  const auto& perm = elements[element];
  auto it = std::lower_bound(perm.begin(), perm.end(), std::make_pair(node, 0),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == perm.end() || it->first != node) throw DomainError("node not in permutation domain");
  return it->second;
}

AutomorphismGroup automorphisms(const Graph& g) {
  ColoredGraph cg;
  cg.n = g.num_nodes();
  cg.adj.resize(cg.n);
  cg.color.assign(cg.n, 0);
  for (auto& [u, v] : g.arcs()) cg.add_arc(g.node_index(u), g.node_index(v));
  CanonicalResult res = canonicalize(cg, /*want_automorphisms=*/true);
  AutomorphismGroup out;
  for (auto& perm : res.automorphisms) {
    std::vector<std::pair<int, int>> map;
    map.reserve(cg.n);
    for (int i = 0; i < cg.n; ++i) map.emplace_back(g.nodes()[i], g.nodes()[perm[i]]);
    out.elements.push_back(std::move(map));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<NodeSetOrbit> node_set_orbits(const Graph& g,
                                          const std::vector<std::vector<int>>& sets) {
  return node_set_orbits(automorphisms(g), sets);
}

std::vector<NodeSetOrbit> node_set_orbits(const AutomorphismGroup& aut,
                                          const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> normalized;
  normalized.reserve(sets.size());
  for (auto s : sets) {
    std::sort(s.begin(), s.end());
    normalized.push_back(std::move(s));
  }
  std::vector<bool> assigned(sets.size(), false);
  std::vector<NodeSetOrbit> orbits;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (assigned[i]) continue;
    // full orbit of the set under the group
    std::set<std::vector<int>> orbit_sets;
    for (std::size_t e = 0; e < aut.order(); ++e) {
      std::vector<int> img;
      img.reserve(normalized[i].size());
      for (int v : normalized[i]) img.push_back(aut.image(e, v));
      std::sort(img.begin(), img.end());
      orbit_sets.insert(std::move(img));
    }
    NodeSetOrbit orbit;
    orbit.representative = *orbit_sets.begin();
    orbit.size = orbit_sets.size();
    for (std::size_t j = 0; j < normalized.size(); ++j) {
      if (!assigned[j] && orbit_sets.count(normalized[j])) {
        assigned[j] = true;
        orbit.member_indices.push_back(j);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const NodeSetOrbit& a, const NodeSetOrbit& b) {
    return a.representative < b.representative;
  });
  return orbits;
}

} // namespace surfgeo
