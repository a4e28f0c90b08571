#include "surfgeo/generation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace surfgeo {

namespace {

std::vector<std::array<int, 3>> face_triples(const SimplicialSurface& s) {
  std::vector<std::array<int, 3>> out;
  out.reserve(s.num_faces());
  for (int f = 0; f < s.num_faces(); ++f) {
    auto t = s.face_vertex_labels(f);
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

// Cyclic neighbor order around vertex v, aligned with its umbrella: the k-th
// umbrella face contains v, u_k and u_{k+1}.
std::vector<int> link_cycle(const SimplicialSurface& s, int v) {
  const auto& faces = s.vertex_faces(v);
  const int d = static_cast<int>(faces.size());
  int vl = s.vertex_label(v);
  auto others = [&](int f) {
    std::vector<int> r;
    for (int x : s.face_vertex_labels(f))
      if (x != vl) r.push_back(x);
    return r;
  };
  auto first = others(faces[0]);
  auto second = others(faces[1 % d]);
  int u0 = (first[0] == second[0] || first[0] == second[1]) ? first[1] : first[0];
  std::vector<int> cyc{u0};
  for (int k = 0; k < d - 1; ++k) {
    auto o = others(faces[k]);
    cyc.push_back(o[0] == cyc.back() ? o[1] : o[0]);
  }
  return cyc;
}

// All vertex splittings of s that stay a vertex-faithful sphere.
void expand(const SimplicialSurface& s, std::map<std::string, SimplicialSurface>& out) {
  auto base = face_triples(s);
  int fresh = 0;
  for (int v = 0; v < s.num_vertices(); ++v) fresh = std::max(fresh, s.vertex_label(v));
  ++fresh;

  for (int v = 0; v < s.num_vertices(); ++v) {
    int v1 = s.vertex_label(v);
    auto cyc = link_cycle(s, v);
    const int d = static_cast<int>(cyc.size());
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        std::vector<std::array<int, 3>> faces;
        for (const auto& t : base)
          if (t[0] != v1 && t[1] != v1 && t[2] != v1) faces.push_back(t);
        for (int k = i; k < j; ++k) faces.push_back({v1, cyc[k], cyc[(k + 1) % d]});
        for (int k = j; k < i + d; ++k) faces.push_back({fresh, cyc[k % d], cyc[(k + 1) % d]});
        faces.push_back({v1, fresh, cyc[i]});
        faces.push_back({v1, fresh, cyc[j]});
        try {
          SimplicialSurface split = SimplicialSurface::build_from_faces(faces);
          std::string form = canonical_form(split);
          out.emplace(std::move(form), std::move(split));
        } catch (const DomainError&) {
          // split glued two faces or collapsed an edge; not a surface
        }
      }
    }
  }
}

std::map<int, std::vector<SimplicialSurface>>& level_cache() {
  static std::map<int, std::vector<SimplicialSurface>> cache;
  return cache;
}
std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

} // namespace

std::vector<SimplicialSurface> generate_spheres(int num_faces) {
  if (num_faces < 4 || num_faces % 2 != 0)
    throw DomainError("sphere face counts are even and at least 4");

  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& cache = level_cache();
  if (cache.empty())
    cache[4] = {SimplicialSurface::build_from_faces(
        {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})};
  for (int n = 6; n <= num_faces; n += 2) {
    if (cache.count(n)) continue;
    std::map<std::string, SimplicialSurface> next;
    for (const auto& s : cache[n - 2]) expand(s, next);
    auto& level = cache[n];
    for (auto& [form, s] : next) level.push_back(std::move(s));
  }
  return cache[num_faces];
}

SimplicialSurface double_ngon(int k) {
  if (k < 3) throw DomainError("double n-gon needs at least 3 rim vertices");
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i < k; ++i) {
    int a = 3 + i, b = 3 + (i + 1) % k;
    faces.push_back({1, a, b});
    faces.push_back({2, a, b});
  }
  return SimplicialSurface::build_from_faces(faces);
}

SimplicialSurface tetrahedral_extension(const SimplicialSurface& s, int face_label) {
  int f = s.face_index(face_label);
  if (f < 0) throw DomainError("no face with label " + std::to_string(face_label));
  int fresh = 0;
  for (int v = 0; v < s.num_vertices(); ++v) fresh = std::max(fresh, s.vertex_label(v));
  ++fresh;
  auto faces = face_triples(s);
  auto [a, b, c] = faces[f];
  faces.erase(faces.begin() + f);
  faces.push_back({a, b, fresh});
  faces.push_back({a, c, fresh});
  faces.push_back({b, c, fresh});
  return SimplicialSurface::build_from_faces(faces);
}

SimplicialSurface prop45_family(int n) {
  if (n < 2) throw DomainError("refined double 2n-gon needs n >= 2");
  const int k = 2 * n; // rim size
  auto faces = face_triples(double_ngon(k));
  int fresh = k + 3;

  // triangles at apex 1: T_i touches rim vertices i+2 and i+3 (labels), wrapping
  auto rim = [&](int i) { return 3 + (i - 3 + k) % k; };
  std::vector<std::array<int, 3>> tri(k + 1);
  for (int i = 1; i <= k; ++i) {
    tri[i] = {1, rim(i + 2), rim(i + 3)};
    std::sort(tri[i].begin(), tri[i].end());
  }

  auto extend = [&](std::array<int, 3> t, int w) {
    auto it = std::find(faces.begin(), faces.end(), t);
    if (it == faces.end()) throw DomainError("refinement lost a triangle");
    faces.erase(it);
    auto [a, b, c] = t;
    std::array<int, 3> x{a, b, w}, y{a, c, w}, z{b, c, w};
    faces.push_back(x);
    faces.push_back(y);
    faces.push_back(z);
  };

  for (int e = 1; e <= k - 1; e += 2) {
    for (int i = e; i <= k - 1; ++i) {
      int w = fresh++;
      extend(tri[i], w);
      tri[i] = {rim(i + 2), rim(i + 3), w};
      std::sort(tri[i].begin(), tri[i].end());
    }
  }
  extend(tri[k - 1], fresh++);

  return SimplicialSurface::build_from_faces(faces);
}

} // namespace surfgeo
