#include "surfgeo/embedding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace surfgeo {

std::vector<int> FacialWalk::node_sequence() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (auto& [node, arc] : steps) out.push_back(node);
  return out;
}

namespace {

void check_rotation(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.num_nodes())
    throw DomainError("rotation system does not cover every node");
  for (auto& [v, seq] : rot.order) {
    if (!g.has_node(v)) throw DomainError("rotation at unknown node " + std::to_string(v));
    std::set<int> expected;
    for (int w : g.neighbors(v)) expected.insert(g.arc_index(v, w));
    std::set<int> got(seq.begin(), seq.end());
    if (got != expected || got.size() != seq.size())
      throw DomainError("rotation at node " + std::to_string(v) +
                        " is not a permutation of its incident arcs");
  }
}

// canonical key of a closed walk under rotation/reflection, for mirror pairing
std::vector<int> walk_key(const std::vector<std::pair<int, int>>& steps) {
  std::vector<int> flat;
  for (auto& [node, arc] : steps) {
    flat.push_back(node);
    flat.push_back(arc);
  }
  const std::size_t n = steps.size();
  std::vector<int> best;
  auto consider = [&](const std::vector<std::pair<int, int>>& seq) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> cand;
      for (std::size_t i = 0; i < n; ++i) {
        cand.push_back(seq[(r + i) % n].first);
        cand.push_back(seq[(r + i) % n].second);
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  };
  consider(steps);
  // reversed traversal: node order reversed, each step leaves via the arc
  // that previously entered it
  std::vector<std::pair<int, int>> rev(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (n - i) % n;
    rev[i] = {steps[j].first, steps[(j + n - 1) % n].second};
  }
  consider(rev);
  return best;
}

} // namespace

TraceResult trace_facial_walks(const Graph& g, const EmbeddingScheme& scheme) {
  if (!is_connected(g)) throw DomainError("face tracing needs a connected graph");
  check_rotation(g, scheme.rotation);
  for (int t : scheme.twisted)
    if (t < 0 || t >= g.num_arcs()) throw DomainError("twisted arc index out of range");

  const int m = g.num_arcs();
  // state = ((arc * 2 + direction) * 2 + flag); direction 0 traverses the
  // arc from its smaller to its larger endpoint
  auto head_of = [&](int arc, int dir) {
    return dir == 0 ? g.arc(arc).second : g.arc(arc).first;
  };
  auto next_state = [&](int state) {
    int flag = state & 1;
    int dir = (state >> 1) & 1;
    int arc = state >> 2;
    int w = head_of(arc, dir);
    if (scheme.twisted.count(arc)) flag ^= 1;
    const auto& rot = scheme.rotation.order.at(w);
    int pos = static_cast<int>(std::find(rot.begin(), rot.end(), arc) - rot.begin());
    int deg = static_cast<int>(rot.size());
    int arc2 = (flag == 0) ? rot[(pos + 1) % deg] : rot[(pos + deg - 1) % deg];
    int dir2 = (g.arc(arc2).first == w) ? 0 : 1;
    return (arc2 << 2) | (dir2 << 1) | flag;
  };

  std::vector<int> orbit_of(4 * m, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < 4 * m; ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orbit;
    int state = start;
    do {
      if (orbit_of[state] >= 0)
        throw DomainError("face traversal produced overlapping orbits");
      orbit_of[state] = id;
      orbit.push_back(state);
      state = next_state(state);
    } while (state != start);
    orbits.push_back(std::move(orbit));
  }

  // each facial walk is traced twice (once per direction); keep one
  // representative per mirror pair
  std::map<std::vector<int>, FacialWalk> unique_walks;
  for (auto& orbit : orbits) {
    FacialWalk walk;
    for (int state : orbit) {
      int dir = (state >> 1) & 1;
      int arc = state >> 2;
      int tail = dir == 0 ? g.arc(arc).first : g.arc(arc).second;
      walk.steps.emplace_back(tail, arc);
    }
    unique_walks.emplace(walk_key(walk.steps), std::move(walk));
  }
  if (unique_walks.size() * 2 != orbits.size())
    throw DomainError("face traversal orbits did not pair into faces");

  TraceResult out;
  for (auto& [key, walk] : unique_walks) out.walks.push_back(std::move(walk));
  std::sort(out.walks.begin(), out.walks.end(), [](const FacialWalk& a, const FacialWalk& b) {
    if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
    return a.steps < b.steps;
  });
  out.euler_characteristic =
      g.num_nodes() - g.num_arcs() + static_cast<int>(out.walks.size());

  // orientable iff the twisted set is switching-equivalent to the empty set:
  // every cycle carries an even number of twisted arcs
  std::map<int, int> sign;
  out.orientable = true;
  for (int root : g.nodes()) {
    if (sign.count(root)) continue;
    sign[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty() && out.orientable) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        int lambda = scheme.twisted.count(g.arc_index(v, w)) ? 1 : 0;
        int want = sign[v] ^ lambda;
        auto it = sign.find(w);
        if (it == sign.end()) {
          sign[w] = want;
          queue.push_back(w);
        } else if (it->second != want) {
          out.orientable = false;
          break;
        }
      }
    }
    if (!out.orientable) break;
  }
  return out;
}

bool is_strong(const std::vector<FacialWalk>& walks) {
  for (auto& walk : walks) {
    std::set<int> nodes, arcs;
    for (auto& [node, arc] : walk.steps) {
      if (!nodes.insert(node).second) return false;
      if (!arcs.insert(arc).second) return false;
    }
    if (walk.steps.size() < 3) return false;
  }
  return true;
}

CycleDoubleCover walks_to_cover(const std::vector<FacialWalk>& walks) {
  if (!is_strong(walks)) throw DomainError("facial walks are not all cycles");
  CycleDoubleCover out;
  for (auto& walk : walks) out.push_back(Cycle::canonical(walk.node_sequence()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CoverSearch {
  const Graph& g;
  const std::vector<Cycle>& cycles;
  std::vector<std::vector<int>> cycle_arcs;     // per cycle, arc indices
  std::vector<std::vector<int>> candidates_of;  // per arc, cycle indices
  std::vector<int> need;
  std::vector<bool> used;
  std::vector<int> chosen;
  bool faithful_filter; // enforce pairwise intersection <= 1 arc
  std::vector<CycleDoubleCover>* out;

  CoverSearch(const Graph& graph, const std::vector<Cycle>& cs, bool faithful,
              std::vector<CycleDoubleCover>* sink)
      : g(graph), cycles(cs), faithful_filter(faithful), out(sink) {
    cycle_arcs.reserve(cycles.size());
    candidates_of.assign(g.num_arcs(), {});
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      cycle_arcs.push_back(cycles[c].arc_indices(g));
      for (int a : cycle_arcs.back()) candidates_of[a].push_back(static_cast<int>(c));
    }
    need.assign(g.num_arcs(), 2);
    used.assign(cycles.size(), false);
  }

  bool feasible(int c) const {
    if (used[c]) return false;
    for (int a : cycle_arcs[c])
      if (need[a] == 0) return false;
    if (faithful_filter) {
      for (int other : chosen) {
        int shared = 0;
        for (int a : cycle_arcs[c])
          if (std::find(cycle_arcs[other].begin(), cycle_arcs[other].end(), a) !=
              cycle_arcs[other].end())
            ++shared;
        if (shared > 1) return false;
      }
    }
    return true;
  }

  void apply(int c) {
    used[c] = true;
    chosen.push_back(c);
    for (int a : cycle_arcs[c]) --need[a];
  }

  void undo(int c) {
    used[c] = false;
    chosen.pop_back();
    for (int a : cycle_arcs[c]) ++need[a];
  }

  void search() {
    int best_arc = -1;
    std::size_t best_count = 0;
    for (int a = 0; a < g.num_arcs(); ++a) {
      if (need[a] == 0) continue;
      std::size_t count = 0;
      for (int c : candidates_of[a])
        if (feasible(c)) ++count;
      if (best_arc < 0 || count < best_count) {
        best_arc = a;
        best_count = count;
        if (count == 0) break;
      }
    }
    if (best_arc < 0) {
      CycleDoubleCover cover;
      for (int c : chosen) cover.push_back(cycles[c]);
      std::sort(cover.begin(), cover.end());
      out->push_back(std::move(cover));
      return;
    }
    if (best_count == 0) return;
    std::vector<int> cands;
    for (int c : candidates_of[best_arc])
      if (feasible(c)) cands.push_back(c);
    if (need[best_arc] == 1) {
      for (int c : cands) {
        apply(c);
        search();
        undo(c);
      }
    } else {
      for (std::size_t i = 0; i < cands.size(); ++i) {
        apply(cands[i]);
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
          if (!feasible(cands[j])) continue;
          apply(cands[j]);
          search();
          undo(cands[j]);
        }
        undo(cands[i]);
      }
    }
  }
};

} // namespace

std::vector<CycleDoubleCover> enumerate_cdcs(const Graph& g, std::size_t max_cycles) {
  if (!is_connected(g) || !is_cubic(g)) throw DomainError("cycle double covers need a connected cubic graph");
  if (has_bridge(g)) throw DomainError("graph has a bridge; no cycle double cover exists");
  std::vector<Cycle> cycles = simple_cycles(g, max_cycles);
  std::vector<CycleDoubleCover> out;
  CoverSearch search(g, cycles, /*faithful=*/false, &out);
  search.search();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialSurface surface_from_cycles(const Graph& g, const CycleDoubleCover& cdc) {
  std::vector<int> coverage(g.num_arcs(), 0);
  for (auto& c : cdc) {
    if (c.nodes.size() < 3) throw DomainError("cover cycle shorter than 3");
    for (int a : c.arc_indices(g)) ++coverage[a];
  }
  for (int a = 0; a < g.num_arcs(); ++a)
    if (coverage[a] != 2)
      throw DomainError("arc {" + std::to_string(g.arc(a).first) + "," +
                        std::to_string(g.arc(a).second) + "} covered " +
                        std::to_string(coverage[a]) + " times");
  CycleDoubleCover sorted = cdc;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, std::vector<int>> descriptor;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    descriptor[static_cast<int>(i) + 1] = sorted[i].nodes;
  return SimplicialSurface::build_from_umbrellas(descriptor);
}

std::vector<SimplicialSurface> enumerate_vertex_faithful_surfaces(const Graph& g,
                                                                  std::size_t max_cycles) {
  if (!is_connected(g) || !is_cubic(g))
    throw DomainError("simplicial embeddings need a connected cubic graph");
  if (has_bridge(g)) return {};
  std::vector<Cycle> cycles = peripheral_cycles(g, max_cycles);
  std::vector<CycleDoubleCover> covers;
  CoverSearch search(g, cycles, /*faithful=*/true, &covers);
  search.search();
  std::map<std::string, SimplicialSurface> by_form;
  for (auto& cover : covers) {
    SimplicialSurface s = surface_from_cycles(g, cover);
    if (!is_vertex_faithful(s)) continue;
    by_form.emplace(canonical_form(s), std::move(s));
  }
  std::vector<SimplicialSurface> out;
  for (auto& [form, s] : by_form) out.push_back(std::move(s));
  return out;
}

} // namespace surfgeo
