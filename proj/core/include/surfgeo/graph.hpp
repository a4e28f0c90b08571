#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surfgeo/errors.hpp"

namespace surfgeo {

// Finite simple undirected graph. Node ids are arbitrary positive integers;
// arcs are stored sorted as (min,max) pairs and addressed by index.
class Graph {
public:
  Graph() = default;

  static Graph from_arcs(std::vector<std::pair<int, int>> arcs);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  bool has_node(int v) const;
  int node_index(int v) const; // -1 if absent
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_arc(int u, int v) const { return arc_index(u, v) >= 0; }
  int arc_index(int u, int v) const; // -1 if absent
  const std::pair<int, int>& arc(int index) const { return arcs_[index]; }

  // Copy with the given arcs (by index) removed; nodes are kept.
  Graph without_arcs(const std::vector<int>& arc_indices) const;
  // Copy with the given nodes removed (and their arcs).
  Graph without_nodes(const std::vector<int>& node_ids) const;

private:
  std::vector<int> nodes_;                       // sorted, unique
  std::vector<std::pair<int, int>> arcs_;        // sorted (min,max)
  std::vector<std::vector<int>> adj_;            // per node index, sorted neighbor ids
};

// Cycle through distinct nodes, length >= 3. Stored in canonical form:
// the smallest node first, second node smaller than the last.
struct Cycle {
  std::vector<int> nodes;

  static Cycle canonical(std::vector<int> nodes);
  bool operator==(const Cycle& o) const { return nodes == o.nodes; }
  bool operator<(const Cycle& o) const;
  std::vector<int> arc_indices(const Graph& g) const;
};

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);
bool is_k_connected(const Graph& g, int k); // k in {1,2,3}
bool has_bridge(const Graph& g);

// Cyclic arc connectivity (no arc set of size <= k-1 splits off two components
// that both contain a cycle). On failure returns the arc indices of a
// minimum-size witness cut.
bool is_cyclically_k_arc_connected(const Graph& g, int k,
                                   std::vector<int>* witness_cut = nullptr);

// All simple cycles, canonically deduplicated and sorted. Throws DomainError
// when more than `limit` cycles exist.
std::vector<Cycle> simple_cycles(const Graph& g, std::size_t limit = 200000);

bool is_chordless(const Graph& g, const Cycle& c);
bool is_peripheral(const Graph& g, const Cycle& c);
std::vector<Cycle> chordless_cycles(const Graph& g, std::size_t limit = 200000);
std::vector<Cycle> peripheral_cycles(const Graph& g, std::size_t limit = 200000);

// Full automorphism group as explicit permutations of node ids
// (small graphs only; the identity is included).
struct AutomorphismGroup {
  std::vector<std::vector<std::pair<int, int>>> elements; // node -> image maps, sorted by node
  std::size_t order() const { return elements.size(); }
  int image(std::size_t element, int node) const;
};

AutomorphismGroup automorphisms(const Graph& g);

struct NodeSetOrbit {
  std::vector<int> representative; // lexicographically least member set
  std::size_t size = 0;
  std::vector<std::size_t> member_indices; // indices into the input list
};

// Orbits of node sets under the automorphism group.
std::vector<NodeSetOrbit> node_set_orbits(const Graph& g,
                                          const std::vector<std::vector<int>>& sets);
std::vector<NodeSetOrbit> node_set_orbits(const AutomorphismGroup& aut,
                                          const std::vector<std::vector<int>>& sets);

} // namespace surfgeo
