#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfgeo/errors.hpp"

namespace surfgeo {

// Closed simplicial surface given by its vertex/edge/face incidences.
// Internal ids are dense 0-based indices; external labels from input files
// are preserved for round-trip I/O. Immutable after construction.
class SimplicialSurface {
public:
  // Construction from the vertex triples of the faces. Only valid for
  // vertex-faithful surfaces: edges are the vertex pairs occurring in
  // exactly two triples.
  static SimplicialSurface build_from_faces(const std::vector<std::array<int, 3>>& faces);

  // Construction from an umbrella descriptor: vertex label -> cyclic face
  // label sequence.
  static SimplicialSurface build_from_umbrellas(
      const std::map<int, std::vector<int>>& descriptor);

  // Raw construction from full incidence data (labels plus index tables).
  // Validates every closed-surface axiom.
  static SimplicialSurface from_incidence(std::vector<int> vertex_labels,
                                          std::vector<int> edge_labels,
                                          std::vector<int> face_labels,
                                          std::vector<std::array<int, 2>> edge_vertices,
                                          std::vector<std::array<int, 2>> edge_faces,
                                          std::vector<std::array<int, 3>> face_edges);

  int num_vertices() const { return static_cast<int>(vertex_labels_.size()); }
  int num_edges() const { return static_cast<int>(edge_labels_.size()); }
  int num_faces() const { return static_cast<int>(face_labels_.size()); }

  int vertex_label(int v) const { return vertex_labels_[v]; }
  int edge_label(int e) const { return edge_labels_[e]; }
  int face_label(int f) const { return face_labels_[f]; }
  int vertex_index(int label) const;
  int face_index(int label) const;

  const std::array<int, 2>& edge_vertices(int e) const { return edge_vertices_[e]; }
  const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }
  const std::array<int, 3>& face_edges(int f) const { return face_edges_[f]; }
  const std::array<int, 3>& face_vertices(int f) const { return face_vertices_[f]; }
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_[v]; }
  const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }
  int vertex_degree(int v) const { return static_cast<int>(vertex_faces_[v].size()); }

  // -1 when the pair is not an edge or not unique
  int edge_between(int v1, int v2) const;

  std::array<int, 3> face_vertex_labels(int f) const;

private:
  SimplicialSurface() = default;
  void finalize_and_validate();

  std::vector<int> vertex_labels_;
  std::vector<int> edge_labels_;
  std::vector<int> face_labels_;
  std::vector<std::array<int, 2>> edge_vertices_;
  std::vector<std::array<int, 2>> edge_faces_;
  std::vector<std::array<int, 3>> face_edges_;
  // derived
  std::vector<std::array<int, 3>> face_vertices_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<std::vector<int>> vertex_faces_; // umbrella order
};

// vertex label -> cyclic face-label sequence, each normalised to the
// lexicographically smallest rotation/reflection
using UmbrellaDescriptor = std::map<int, std::vector<int>>;

// face index -> oriented vertex-index triple satisfying the edge
// compatibility condition
using Orientation = std::vector<std::array<int, 3>>;

enum class SurfaceLabel { sphere, projective_plane, torus, klein_bottle, other };

struct SurfaceClass {
  int euler_characteristic = 0;
  bool orientable = false;
  int genus = 0;
  SurfaceLabel label = SurfaceLabel::other;
};

std::string to_string(SurfaceLabel label);

struct Waist {
  int n = 0;
  std::vector<int> vertices; // cyclic, vertex labels, canonical rotation/reflection
  std::vector<int> edges;    // edge indices, aligned with the vertex cycle
  bool separating = false;
};

UmbrellaDescriptor umbrella_descriptor(const SimplicialSurface& s);
std::vector<int> normalize_cyclic(std::vector<int> seq);

int euler_characteristic(const SimplicialSurface& s);
std::optional<Orientation> orientation(const SimplicialSurface& s);
SurfaceClass classify(const SimplicialSurface& s);
bool is_vertex_faithful(const SimplicialSurface& s);

std::vector<Waist> find_waists(const SimplicialSurface& s, int n);
std::pair<SimplicialSurface, SimplicialSurface> cut_along_3waist(const SimplicialSurface& s,
                                                                 const Waist& w);

std::string canonical_form(const SimplicialSurface& s);
bool is_isomorphic(const SimplicialSurface& a, const SimplicialSurface& b);
// vertex-label map witnessing an isomorphism, when one exists
std::optional<std::map<int, int>> isomorphism_witness(const SimplicialSurface& a,
                                                      const SimplicialSurface& b);

} // namespace surfgeo
