#include "surfgeo/canonical.hpp"

#include <algorithm>
#include <cstdint>

namespace surfgeo {

namespace {

// Refine to the coarsest equitable partition respecting `color`.
// Colours are renormalised to ranks 0..k-1 of canonically ordered signatures,
// so the result is invariant under relabelling.
std::vector<int> refine(const ColoredGraph& g, std::vector<int> color) {
  const int n = g.n;
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      std::vector<int> nc;
      nc.reserve(g.adj[v].size());
      for (int w : g.adj[v]) nc.push_back(color[w]);
      std::sort(nc.begin(), nc.end());
      s.insert(s.end(), nc.begin(), nc.end());
      sig[v] = std::move(s);
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    int next_classes = static_cast<int>(distinct.size());
    if (next_classes == classes) return next;
    classes = next_classes;
    color = std::move(next);
  }
}

void append_int(std::string& out, int value) {
  auto u = static_cast<std::uint32_t>(value);
  out.push_back(static_cast<char>((u >> 24) & 0xff));
  out.push_back(static_cast<char>((u >> 16) & 0xff));
  out.push_back(static_cast<char>((u >> 8) & 0xff));
  out.push_back(static_cast<char>(u & 0xff));
}

struct Searcher {
  const ColoredGraph& g;
  bool want_auts;
  bool have_best = false;
  std::string best_cert;
  std::vector<int> best_lab;
  std::vector<int> best_inverse; // canonical position -> node
  std::vector<std::vector<int>> auts;

  explicit Searcher(const ColoredGraph& graph, bool auts_wanted)
      : g(graph), want_auts(auts_wanted) {}

  std::string certificate(const std::vector<int>& lab) const {
    const int n = g.n;
    std::string cert;
    append_int(cert, n);
    std::vector<int> orig(n);
    for (int v = 0; v < n; ++v) orig[lab[v]] = g.color[v];
    for (int c : orig) append_int(cert, c);
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) {
      for (int w : g.adj[v]) {
        if (v < w) {
          int a = lab[v], b = lab[w];
          arcs.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
    }
    std::sort(arcs.begin(), arcs.end());
    append_int(cert, static_cast<int>(arcs.size()));
    for (auto& [a, b] : arcs) {
      append_int(cert, a);
      append_int(cert, b);
    }
    return cert;
  }

  void leaf(const std::vector<int>& color) {
    std::vector<int> lab = color; // discrete: colour rank == position
    std::string cert = certificate(lab);
    if (!have_best || cert < best_cert) {
      have_best = true;
      best_cert = std::move(cert);
      best_lab = lab;
      best_inverse.assign(g.n, 0);
      for (int v = 0; v < g.n; ++v) best_inverse[lab[v]] = v;
      auts.clear();
      if (want_auts) {
        std::vector<int> id(g.n);
        for (int v = 0; v < g.n; ++v) id[v] = v;
        auts.push_back(std::move(id));
      }
    } else if (want_auts && cert == best_cert) {
      std::vector<int> perm(g.n);
      for (int v = 0; v < g.n; ++v) perm[v] = best_inverse[lab[v]];
      auts.push_back(std::move(perm));
    }
  }

  void run(std::vector<int> color) {
    color = refine(g, color);
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    if (classes == g.n) {
      leaf(color);
      return;
    }
    // smallest colour with a non-singleton class
    std::vector<int> count(classes, 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < classes; ++c) {
      if (count[c] >= 2) {
        target = c;
        break;
      }
    }
    for (int v = 0; v < g.n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> child(g.n);
      for (int w = 0; w < g.n; ++w) child[w] = color[w] * 2;
      child[v] -= 1;
      run(std::move(child));
    }
  }
};

} // namespace

CanonicalResult canonicalize(const ColoredGraph& g, bool want_automorphisms) {
  Searcher s(g, want_automorphisms);
  if (g.n == 0) {
    CanonicalResult r;
    append_int(r.certificate, 0);
    if (want_automorphisms) r.automorphisms.push_back({});
    return r;
  }
  s.run(g.color);
  CanonicalResult r;
  r.labeling = std::move(s.best_lab);
  r.certificate = std::move(s.best_cert);
  if (want_automorphisms) {
    std::sort(s.auts.begin(), s.auts.end());
    s.auts.erase(std::unique(s.auts.begin(), s.auts.end()), s.auts.end());
    r.automorphisms = std::move(s.auts);
  }
  return r;
}

} // namespace surfgeo
