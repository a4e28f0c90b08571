#pragma once

#include <vector>

#include "surfgeo/surface.hpp"

namespace surfgeo {

// All vertex-faithful simplicial spheres with exactly `num_faces` faces, up to
// isomorphism, sorted by canonical form. `num_faces` must be even and >= 4.
// Built by vertex-splitting expansion from the tetrahedron; levels are cached.
std::vector<SimplicialSurface> generate_spheres(int num_faces);

// Two umbrellas of size k joined along their boundaries: 2 apex vertices of
// degree k, k rim vertices of degree 4, 2k faces. k >= 3.
SimplicialSurface double_ngon(int k);

// Replaces the face with the given label by three faces around a new
// degree-3 vertex. Preserves the Euler characteristic.
SimplicialSurface tetrahedral_extension(const SimplicialSurface& s, int face_label);

// Refined double 2n-gon whose edge graph has a trivial automorphism group
// and at least C(2n, n) complete bipartite K_{2,n} subgraphs. n >= 2.
SimplicialSurface prop45_family(int n);

} // namespace surfgeo
