#pragma once

#include <iosfwd>
#include <string>

#include "surfgeo/graph.hpp"
#include "surfgeo/surface.hpp"

namespace surfgeo {

// Text formats. `#` starts a comment, blank lines are ignored.
//
// Surface, face format:      one face per line, three vertex labels "a b c".
// Surface, umbrella format:  one vertex per line, "v: f1 f2 ..." with the
//                            cyclic face-label sequence around v.
// Graph:                     one arc per line, "u v".
//
// read_surface auto-detects the format: umbrella when a data line contains
// a colon, face format otherwise.

SimplicialSurface read_surface(std::istream& in);
SimplicialSurface read_surface_file(const std::string& path);
void write_surface_faces(std::ostream& out, const SimplicialSurface& s);
void write_surface_umbrellas(std::ostream& out, const SimplicialSurface& s);

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

} // namespace surfgeo
