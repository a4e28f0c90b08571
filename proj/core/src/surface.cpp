#include "surfgeo/surface.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "surfgeo/canonical.hpp"

namespace surfgeo {

namespace {

std::string pair_str(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

} // namespace

int SimplicialSurface::vertex_index(int label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertex_labels_[v] == label) return v;
  return -1;
}

int SimplicialSurface::face_index(int label) const {
  for (int f = 0; f < num_faces(); ++f)
    if (face_labels_[f] == label) return f;
  return -1;
}

int SimplicialSurface::edge_between(int v1, int v2) const {
  int found = -1;
  for (int e = 0; e < num_edges(); ++e) {
    auto [a, b] = edge_vertices_[e];
    if ((a == v1 && b == v2) || (a == v2 && b == v1)) {
      if (found >= 0) return -1; // not unique
      found = e;
    }
  }
  return found;
}

std::array<int, 3> SimplicialSurface::face_vertex_labels(int f) const {
  auto [a, b, c] = face_vertices_[f];
  std::array<int, 3> out{vertex_labels_[a], vertex_labels_[b], vertex_labels_[c]};
  std::sort(out.begin(), out.end());
  return out;
}

void SimplicialSurface::finalize_and_validate() {
  const int nv = num_vertices(), ne = num_edges(), nf = num_faces();
  if (nv == 0 || ne == 0 || nf == 0)
    throw AxiomError("edge-vertices", "empty surface");

  // condition 1: every edge has two distinct vertices
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = edge_vertices_[e];
    if (a < 0 || a >= nv || b < 0 || b >= nv || a == b)
      throw AxiomError("edge-vertices", "edge " + std::to_string(edge_labels_[e]) +
                                            " lacks two distinct vertices");
  }
  // condition 3: every edge has two distinct faces, consistent with face_edges
  std::vector<int> edge_face_count(ne, 0);
  for (int f = 0; f < nf; ++f)
    for (int e : face_edges_[f]) {
      if (e < 0 || e >= ne) throw AxiomError("face-structure", "face references unknown edge");
      ++edge_face_count[e];
    }
  for (int e = 0; e < ne; ++e) {
    auto [f1, f2] = edge_faces_[e];
    if (f1 < 0 || f1 >= nf || f2 < 0 || f2 >= nf || f1 == f2 || edge_face_count[e] != 2)
      throw AxiomError("edge-faces", "edge " + std::to_string(edge_labels_[e]) +
                                         " is not incident to exactly two faces");
    bool ok1 = std::count(face_edges_[f1].begin(), face_edges_[f1].end(), e) == 1;
    bool ok2 = std::count(face_edges_[f2].begin(), face_edges_[f2].end(), e) == 1;
    if (!ok1 || !ok2)
      throw AxiomError("edge-faces", "edge/face incidence tables disagree for edge " +
                                         std::to_string(edge_labels_[e]));
  }
  // condition 2: every face has three distinct edges and three derived
  // vertices, each on exactly two of the edges
  face_vertices_.assign(nf, {});
  for (int f = 0; f < nf; ++f) {
    auto [e1, e2, e3] = face_edges_[f];
    if (e1 == e2 || e1 == e3 || e2 == e3)
      throw AxiomError("face-structure",
                       "face " + std::to_string(face_labels_[f]) + " repeats an edge");
    std::map<int, int> vcount;
    for (int e : face_edges_[f]) {
      ++vcount[edge_vertices_[e][0]];
      ++vcount[edge_vertices_[e][1]];
    }
    if (vcount.size() != 3)
      throw AxiomError("face-structure", "face " + std::to_string(face_labels_[f]) +
                                             " does not have three vertices");
    int i = 0;
    for (auto& [v, cnt] : vcount) {
      if (cnt != 2)
        throw AxiomError("face-structure",
                         "face " + std::to_string(face_labels_[f]) +
                             " has a vertex on " + std::to_string(cnt) + " of its edges");
      face_vertices_[f][i++] = v;
    }
  }

  vertex_edges_.assign(nv, {});
  for (int e = 0; e < ne; ++e) {
    vertex_edges_[edge_vertices_[e][0]].push_back(e);
    vertex_edges_[edge_vertices_[e][1]].push_back(e);
  }

  // umbrella condition: the faces around each vertex form one closed cycle
  vertex_faces_.assign(nv, {});
  for (int v = 0; v < nv; ++v) {
    std::vector<int> faces_at_v;
    for (int f = 0; f < nf; ++f)
      if (std::count(face_vertices_[f].begin(), face_vertices_[f].end(), v)) faces_at_v.push_back(f);
    const int deg = static_cast<int>(faces_at_v.size());
    if (deg < 3)
      throw AxiomError("vertex-degree", "vertex " + std::to_string(vertex_labels_[v]) +
                                            " has degree " + std::to_string(deg));
    if (static_cast<int>(vertex_edges_[v].size()) != deg)
      throw AxiomError("umbrella", "vertex " + std::to_string(vertex_labels_[v]) +
                                       " has mismatched edge and face counts");
    // the two edges of a face incident to v
    auto v_edges_of = [&](int f) {
      std::array<int, 2> out{-1, -1};
      int k = 0;
      for (int e : face_edges_[f])
        if (edge_vertices_[e][0] == v || edge_vertices_[e][1] == v) {
          if (k == 2)
            throw AxiomError("face-structure", "face with three edges at one vertex");
          out[k++] = e;
        }
      if (k != 2)
        throw AxiomError("umbrella", "face not linked by two edges at vertex " +
                                         std::to_string(vertex_labels_[v]));
      return out;
    };
    int start = faces_at_v.front();
    std::vector<int> umbrella{start};
    std::set<int> visited{start};
    int leave = v_edges_of(start)[0];
    int cur = start;
    while (true) {
      auto [f1, f2] = edge_faces_[leave];
      int next = (f1 == cur) ? f2 : f1;
      if (next == start) break;
      if (visited.count(next) ||
          !std::count(face_vertices_[next].begin(), face_vertices_[next].end(), v))
        throw AxiomError("umbrella", "faces around vertex " +
                                         std::to_string(vertex_labels_[v]) +
                                         " do not form a single cycle");
      umbrella.push_back(next);
      visited.insert(next);
      auto es = v_edges_of(next);
      leave = (es[0] == leave) ? es[1] : es[0];
      cur = next;
    }
    if (static_cast<int>(umbrella.size()) != deg)
      throw AxiomError("umbrella", "vertex link of vertex " +
                                       std::to_string(vertex_labels_[v]) + " is disconnected");
    vertex_faces_[v] = std::move(umbrella);
  }

  // connectivity via edge-face paths
  std::vector<int> comp(nf, -1);
  std::deque<int> queue{0};
  comp[0] = 0;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int e : face_edges_[f]) {
      auto [f1, f2] = edge_faces_[e];
      int g = (f1 == f) ? f2 : f1;
      if (comp[g] < 0) {
        comp[g] = 0;
        queue.push_back(g);
      }
    }
  }
  if (std::count(comp.begin(), comp.end(), -1) > 0)
    throw AxiomError("connected", "surface is not connected");
}

SimplicialSurface SimplicialSurface::from_incidence(
    std::vector<int> vertex_labels, std::vector<int> edge_labels, std::vector<int> face_labels,
    std::vector<std::array<int, 2>> edge_vertices, std::vector<std::array<int, 2>> edge_faces,
    std::vector<std::array<int, 3>> face_edges) {
  SimplicialSurface s;
  s.vertex_labels_ = std::move(vertex_labels);
  s.edge_labels_ = std::move(edge_labels);
  s.face_labels_ = std::move(face_labels);
  s.edge_vertices_ = std::move(edge_vertices);
  s.edge_faces_ = std::move(edge_faces);
  s.face_edges_ = std::move(face_edges);
  s.finalize_and_validate();
  return s;
}

SimplicialSurface SimplicialSurface::build_from_faces(
    const std::vector<std::array<int, 3>>& faces) {
  std::set<std::array<int, 3>> seen;
  std::set<int> vertex_set;
  std::vector<std::array<int, 3>> triples;
  for (auto t : faces) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw DomainError("face triple " + pair_str(t[0], t[2]) + " repeats a vertex");
    if (!seen.insert(t).second)
      throw DomainError("repeated face triple");
    triples.push_back(t);
    for (int v : t) vertex_set.insert(v);
  }
  std::sort(triples.begin(), triples.end());

  std::vector<int> vertex_labels(vertex_set.begin(), vertex_set.end());
  auto vindex = [&](int label) {
    return static_cast<int>(std::lower_bound(vertex_labels.begin(), vertex_labels.end(), label) -
                            vertex_labels.begin());
  };

  std::map<std::pair<int, int>, std::vector<int>> pair_faces;
  for (int f = 0; f < static_cast<int>(triples.size()); ++f) {
    auto [a, b, c] = triples[f];
    pair_faces[{a, b}].push_back(f);
    pair_faces[{a, c}].push_back(f);
    pair_faces[{b, c}].push_back(f);
  }
  for (auto& [pair, fs] : pair_faces) {
    if (fs.size() != 2)
      throw AxiomError("edge-faces", "vertex pair " + pair_str(pair.first, pair.second) +
                                         " occurs in " + std::to_string(fs.size()) +
                                         " faces (expected 2)");
  }

  std::vector<int> edge_labels, face_labels;
  std::vector<std::array<int, 2>> edge_vertices, edge_faces;
  std::map<std::pair<int, int>, int> edge_of_pair;
  int e = 0;
  for (auto& [pair, fs] : pair_faces) {
    edge_of_pair[pair] = e;
    edge_labels.push_back(e + 1);
    edge_vertices.push_back({vindex(pair.first), vindex(pair.second)});
    edge_faces.push_back({fs[0], fs[1]});
    ++e;
  }
  std::vector<std::array<int, 3>> face_edges;
  for (int f = 0; f < static_cast<int>(triples.size()); ++f) {
    auto [a, b, c] = triples[f];
    face_edges.push_back({edge_of_pair[{a, b}], edge_of_pair[{a, c}], edge_of_pair[{b, c}]});
    face_labels.push_back(f + 1);
  }
  return from_incidence(std::move(vertex_labels), std::move(edge_labels), std::move(face_labels),
                        std::move(edge_vertices), std::move(edge_faces), std::move(face_edges));
}

SimplicialSurface SimplicialSurface::build_from_umbrellas(
    const std::map<int, std::vector<int>>& descriptor) {
  // face label -> number of umbrellas containing it
  std::map<int, int> face_count;
  for (auto& [v, seq] : descriptor) {
    if (seq.size() < 3)
      throw DomainError("umbrella of vertex " + std::to_string(v) + " has fewer than 3 faces");
    std::set<int> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size())
      throw DomainError("umbrella of vertex " + std::to_string(v) + " repeats a face");
    for (int f : seq) ++face_count[f];
  }
  for (auto& [f, cnt] : face_count)
    if (cnt != 3)
      throw AxiomError("face-structure", "face " + std::to_string(f) + " appears in " +
                                             std::to_string(cnt) + " umbrellas (expected 3)");

  std::vector<int> face_labels;
  for (auto& [f, cnt] : face_count) face_labels.push_back(f);
  auto findex = [&](int label) {
    return static_cast<int>(std::lower_bound(face_labels.begin(), face_labels.end(), label) -
                            face_labels.begin());
  };

  std::vector<int> vertex_labels;
  for (auto& [v, seq] : descriptor) vertex_labels.push_back(v);
  auto vindex = [&](int label) {
    return static_cast<int>(std::lower_bound(vertex_labels.begin(), vertex_labels.end(), label) -
                            vertex_labels.begin());
  };

  // adjacent face pair -> vertices whose umbrella shows the pair
  std::map<std::pair<int, int>, std::vector<int>> pair_vertices;
  for (auto& [v, seq] : descriptor) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      int f1 = seq[i], f2 = seq[(i + 1) % seq.size()];
      pair_vertices[{std::min(f1, f2), std::max(f1, f2)}].push_back(v);
    }
  }
  std::vector<int> edge_labels;
  std::vector<std::array<int, 2>> edge_vertices, edge_faces;
  std::map<int, std::vector<int>> edges_of_face;
  int e = 0;
  for (auto& [pair, vs] : pair_vertices) {
    if (vs.size() != 2)
      throw AxiomError("edge-vertices", "adjacent face pair " +
                                            pair_str(pair.first, pair.second) + " appears in " +
                                            std::to_string(vs.size()) + " umbrellas (expected 2)");
    edge_labels.push_back(e + 1);
    edge_vertices.push_back({vindex(vs[0]), vindex(vs[1])});
    edge_faces.push_back({findex(pair.first), findex(pair.second)});
    edges_of_face[findex(pair.first)].push_back(e);
    edges_of_face[findex(pair.second)].push_back(e);
    ++e;
  }
  std::vector<std::array<int, 3>> face_edges;
  for (int f = 0; f < static_cast<int>(face_labels.size()); ++f) {
    auto& es = edges_of_face[f];
    if (es.size() != 3)
      throw AxiomError("face-structure", "face " + std::to_string(face_labels[f]) + " has " +
                                             std::to_string(es.size()) + " edges (expected 3)");
    face_edges.push_back({es[0], es[1], es[2]});
  }
  return from_incidence(std::move(vertex_labels), std::move(edge_labels), std::move(face_labels),
                        std::move(edge_vertices), std::move(edge_faces), std::move(face_edges));
}

std::vector<int> normalize_cyclic(std::vector<int> seq) {
  if (seq.empty()) return seq;
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::vector<int> cand(seq.begin() + r, seq.end());
      cand.insert(cand.end(), seq.begin(), seq.begin() + r);
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

UmbrellaDescriptor umbrella_descriptor(const SimplicialSurface& s) {
  UmbrellaDescriptor out;
  for (int v = 0; v < s.num_vertices(); ++v) {
    std::vector<int> labels;
    for (int f : s.vertex_faces(v)) labels.push_back(s.face_label(f));
    out[s.vertex_label(v)] = normalize_cyclic(std::move(labels));
  }
  return out;
}

int euler_characteristic(const SimplicialSurface& s) {
  return s.num_vertices() - s.num_edges() + s.num_faces();
}

std::optional<Orientation> orientation(const SimplicialSurface& s) {
  const int nf = s.num_faces();
  // base orientation of each face: ascending vertex triple read as a 3-cycle;
  // sign[f] = +1 keeps it, -1 reverses it
  auto base_dir = [&](int f, int va, int vb) {
    // +1 when the base 3-cycle steps va -> vb
    auto [a, b, c] = s.face_vertices(f);
    if ((va == a && vb == b) || (va == b && vb == c) || (va == c && vb == a)) return 1;
    return -1;
  };
  std::vector<int> sign(nf, 0);
  for (int seed = 0; seed < nf; ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int e : s.face_edges(f)) {
        auto [f1, f2] = s.edge_faces(e);
        int g = (f1 == f) ? f2 : f1;
        auto [va, vb] = s.edge_vertices(e);
        // compatibility: the two faces traverse the shared edge oppositely
        int need = (base_dir(f, va, vb) == base_dir(g, va, vb)) ? -sign[f] : sign[f];
        if (sign[g] == 0) {
          sign[g] = need;
          queue.push_back(g);
        } else if (sign[g] != need) {
          return std::nullopt;
        }
      }
    }
  }
  Orientation out(nf);
  for (int f = 0; f < nf; ++f) {
    auto [a, b, c] = s.face_vertices(f);
    out[f] = (sign[f] > 0) ? std::array<int, 3>{a, b, c} : std::array<int, 3>{a, c, b};
  }
  return out;
}

std::string to_string(SurfaceLabel label) {
  switch (label) {
    case SurfaceLabel::sphere: return "sphere";
    case SurfaceLabel::projective_plane: return "projective-plane";
    case SurfaceLabel::torus: return "torus";
    case SurfaceLabel::klein_bottle: return "klein-bottle";
    case SurfaceLabel::other: return "other";
  }
  return "other";
}

SurfaceClass classify(const SimplicialSurface& s) {
  SurfaceClass out;
  out.euler_characteristic = euler_characteristic(s);
  out.orientable = orientation(s).has_value();
  if (out.orientable) {
    if ((2 - out.euler_characteristic) % 2 != 0)
      throw DomainError("orientable surface with odd Euler characteristic");
    out.genus = (2 - out.euler_characteristic) / 2;
    out.label = (out.genus == 0)   ? SurfaceLabel::sphere
                : (out.genus == 1) ? SurfaceLabel::torus
                                   : SurfaceLabel::other;
  } else {
    out.genus = 2 - out.euler_characteristic;
    out.label = (out.genus == 1)   ? SurfaceLabel::projective_plane
                : (out.genus == 2) ? SurfaceLabel::klein_bottle
                                   : SurfaceLabel::other;
  }
  return out;
}

bool is_vertex_faithful(const SimplicialSurface& s) {
  std::set<std::array<int, 2>> edge_sets;
  for (int e = 0; e < s.num_edges(); ++e) {
    auto [a, b] = s.edge_vertices(e);
    if (!edge_sets.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  std::set<std::array<int, 3>> face_sets;
  for (int f = 0; f < s.num_faces(); ++f) {
    if (!face_sets.insert(s.face_vertices(f)).second) return false;
  }
  return true;
}

namespace {

// number of connected components of the faces when the given edges are cut
int cut_components(const SimplicialSurface& s, const std::set<int>& cut_edges) {
  std::vector<int> parent(s.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < s.num_edges(); ++e) {
    if (cut_edges.count(e)) continue;
    auto [f1, f2] = s.edge_faces(e);
    parent[find(f1)] = find(f2);
  }
  std::set<int> roots;
  for (int f = 0; f < s.num_faces(); ++f) roots.insert(find(f));
  return static_cast<int>(roots.size());
}

bool edges_share_face(const SimplicialSurface& s, int e1, int e2) {
  auto [a1, a2] = s.edge_faces(e1);
  auto [b1, b2] = s.edge_faces(e2);
  return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

} // namespace

std::vector<Waist> find_waists(const SimplicialSurface& s, int n) {
  if (n < 2) throw DomainError("waist length must be at least 2");
  std::vector<Waist> out;
  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> vertex_indices, std::vector<int> edges) {
    std::vector<int> labels;
    for (int v : vertex_indices) labels.push_back(s.vertex_label(v));
    labels = normalize_cyclic(std::move(labels));
    if (!seen.insert(labels).second) return;
    Waist w;
    w.n = n;
    w.vertices = std::move(labels);
    w.edges = std::move(edges);
    w.separating = (cut_components(s, std::set<int>(w.edges.begin(), w.edges.end())) == 2);
    out.push_back(std::move(w));
  };

  if (n == 2) {
    // doubled edges; empty on vertex-faithful surfaces
    for (int e1 = 0; e1 < s.num_edges(); ++e1)
      for (int e2 = e1 + 1; e2 < s.num_edges(); ++e2) {
        auto a = s.edge_vertices(e1), b = s.edge_vertices(e2);
        std::array<int, 2> sa{std::min(a[0], a[1]), std::max(a[0], a[1])};
        std::array<int, 2> sb{std::min(b[0], b[1]), std::max(b[0], b[1])};
        if (sa == sb && !edges_share_face(s, e1, e2)) add({sa[0], sa[1]}, {e1, e2});
      }
  } else if (n == 3) {
    for (int u = 0; u < s.num_vertices(); ++u)
      for (int v = u + 1; v < s.num_vertices(); ++v) {
        int euv = s.edge_between(u, v);
        if (euv < 0) continue;
        for (int w = v + 1; w < s.num_vertices(); ++w) {
          int evw = s.edge_between(v, w), euw = s.edge_between(u, w);
          if (evw < 0 || euw < 0) continue;
          if (!edges_share_face(s, euv, evw) && !edges_share_face(s, evw, euw) &&
              !edges_share_face(s, euv, euw))
            add({u, v, w}, {euv, evw, euw});
        }
      }
  } else {
    if (!find_waists(s, 3).empty()) return {};
    // vertex adjacency and all-pairs distances
    const int nv = s.num_vertices();
    std::vector<std::vector<int>> adj(nv);
    for (int e = 0; e < s.num_edges(); ++e) {
      auto [a, b] = s.edge_vertices(e);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<std::vector<int>> dist(nv, std::vector<int>(nv, -1));
    for (int src = 0; src < nv; ++src) {
      std::deque<int> queue{src};
      dist[src][src] = 0;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[x])
          if (dist[src][y] < 0) {
            dist[src][y] = dist[src][x] + 1;
            queue.push_back(y);
          }
      }
    }
    // simple vertex cycles of length n, rooted at their minimum vertex
    std::vector<int> path;
    std::set<int> on_path;
    auto dfs = [&](auto&& self, int root, int v) -> void {
      if (static_cast<int>(path.size()) == n) {
        if (std::count(adj[v].begin(), adj[v].end(), root) && path[1] < path.back()) {
          bool faithful = true;
          for (int i = 0; i < n && faithful; ++i)
            for (int j = i + 1; j < n && faithful; ++j) {
              int along = std::min(j - i, n - (j - i));
              if (dist[path[i]][path[j]] != along) faithful = false;
            }
          if (faithful) {
            std::vector<int> edges;
            for (int i = 0; i < n; ++i)
              edges.push_back(s.edge_between(path[i], path[(i + 1) % n]));
            add(path, std::move(edges));
          }
        }
        return;
      }
      for (int w : adj[v]) {
        if (w <= root || on_path.count(w)) continue;
        path.push_back(w);
        on_path.insert(w);
        self(self, root, w);
        path.pop_back();
        on_path.erase(w);
      }
    };
    for (int root = 0; root < nv; ++root) {
      path = {root};
      on_path = {root};
      dfs(dfs, root, root);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Waist& a, const Waist& b) { return a.vertices < b.vertices; });
  return out;
}

std::pair<SimplicialSurface, SimplicialSurface> cut_along_3waist(const SimplicialSurface& s,
                                                                 const Waist& w) {
  if (w.n != 3 || !w.separating) throw DomainError("cut requires a separating 3-waist");
  std::set<int> cut(w.edges.begin(), w.edges.end());
  // two face components of the cut
  std::vector<int> side(s.num_faces(), -1);
  int next_side = 0;
  for (int seed = 0; seed < s.num_faces(); ++seed) {
    if (side[seed] >= 0) continue;
    std::deque<int> queue{seed};
    side[seed] = next_side;
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int e : s.face_edges(f)) {
        if (cut.count(e)) continue;
        auto [f1, f2] = s.edge_faces(e);
        int g = (f1 == f) ? f2 : f1;
        if (side[g] < 0) {
          side[g] = next_side;
          queue.push_back(g);
        }
      }
    }
    ++next_side;
  }
  if (next_side != 2) throw DomainError("cut did not produce two components");

  std::array<int, 3> cap{w.vertices[0], w.vertices[1], w.vertices[2]};
  std::array<std::vector<std::array<int, 3>>, 2> sides;
  for (int f = 0; f < s.num_faces(); ++f) sides[side[f]].push_back(s.face_vertex_labels(f));
  sides[0].push_back(cap);
  sides[1].push_back(cap);
  return {SimplicialSurface::build_from_faces(sides[0]),
          SimplicialSurface::build_from_faces(sides[1])};
}

namespace {

ColoredGraph incidence_graph(const SimplicialSurface& s) {
  ColoredGraph g;
  const int nv = s.num_vertices(), ne = s.num_edges(), nf = s.num_faces();
  g.n = nv + ne + nf;
  g.adj.resize(g.n);
  g.color.resize(g.n);
  for (int v = 0; v < nv; ++v) g.color[v] = 0;
  for (int e = 0; e < ne; ++e) g.color[nv + e] = 1;
  for (int f = 0; f < nf; ++f) g.color[nv + ne + f] = 2;
  for (int e = 0; e < ne; ++e) {
    g.add_arc(s.edge_vertices(e)[0], nv + e);
    g.add_arc(s.edge_vertices(e)[1], nv + e);
    g.add_arc(nv + e, nv + ne + s.edge_faces(e)[0]);
    g.add_arc(nv + e, nv + ne + s.edge_faces(e)[1]);
  }
  return g;
}

} // namespace

std::string canonical_form(const SimplicialSurface& s) {
  return canonicalize(incidence_graph(s)).certificate;
}

bool is_isomorphic(const SimplicialSurface& a, const SimplicialSurface& b) {
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::map<int, int>> isomorphism_witness(const SimplicialSurface& a,
                                                      const SimplicialSurface& b) {
  auto ca = canonicalize(incidence_graph(a));
  auto cb = canonicalize(incidence_graph(b));
  if (ca.certificate != cb.certificate) return std::nullopt;
  std::vector<int> inverse_b(cb.labeling.size());
  for (std::size_t i = 0; i < cb.labeling.size(); ++i) inverse_b[cb.labeling[i]] = static_cast<int>(i);
  std::map<int, int> out;
  for (int v = 0; v < a.num_vertices(); ++v) {
    int node_b = inverse_b[ca.labeling[v]];
    out[a.vertex_label(v)] = b.vertex_label(node_b);
  }
  return out;
}

} // namespace surfgeo
