#include "surfgeo/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace surfgeo {

namespace {

// (line number, payload) pairs with comments and blank lines stripped
std::vector<std::pair<int, std::string>> data_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  return out;
}

std::vector<int> parse_ints(int line_no, const std::string& text, int expect = -1) {
  std::istringstream ss(text);
  std::vector<int> vals;
  int x;
  while (ss >> x) vals.push_back(x);
  std::string rest;
  if (ss.clear(), ss >> rest)
    throw ParseError(line_no, "unexpected token '" + rest + "'");
  if (expect >= 0 && static_cast<int>(vals.size()) != expect)
    throw ParseError(line_no, "expected " + std::to_string(expect) + " integers, got " +
                                  std::to_string(vals.size()));
  return vals;
}

} // namespace

SimplicialSurface read_surface(std::istream& in) {
  auto lines = data_lines(in);
  if (lines.empty()) throw ParseError(0, "empty surface description");

  bool umbrella = std::any_of(lines.begin(), lines.end(), [](const auto& l) {
    return l.second.find(':') != std::string::npos;
  });

  if (!umbrella) {
    std::vector<std::array<int, 3>> faces;
    for (auto& [no, text] : lines) {
      auto v = parse_ints(no, text, 3);
      faces.push_back({v[0], v[1], v[2]});
    }
    return SimplicialSurface::build_from_faces(faces);
  }

  UmbrellaDescriptor desc;
  for (auto& [no, text] : lines) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(no, "expected 'vertex: faces...'");
    auto head = parse_ints(no, text.substr(0, colon), 1);
    auto faces = parse_ints(no, text.substr(colon + 1));
    if (faces.size() < 3) throw ParseError(no, "an umbrella needs at least 3 faces");
    if (!desc.emplace(head[0], std::move(faces)).second)
      throw ParseError(no, "duplicate umbrella for vertex " + std::to_string(head[0]));
  }
  return SimplicialSurface::build_from_umbrellas(desc);
}

SimplicialSurface read_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_surface(in);
}

void write_surface_faces(std::ostream& out, const SimplicialSurface& s) {
  std::vector<std::array<int, 3>> faces;
  for (int f = 0; f < s.num_faces(); ++f) {
    auto t = s.face_vertex_labels(f);
    std::sort(t.begin(), t.end());
    faces.push_back(t);
  }
  std::sort(faces.begin(), faces.end());
  for (const auto& t : faces) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_surface_umbrellas(std::ostream& out, const SimplicialSurface& s) {
  for (const auto& [v, faces] : umbrella_descriptor(s)) {
    out << v << ':';
    for (int f : faces) out << ' ' << f;
    out << '\n';
  }
}

Graph read_graph(std::istream& in) {
  std::vector<std::pair<int, int>> arcs;
  for (auto& [no, text] : data_lines(in)) {
    auto v = parse_ints(no, text, 2);
    if (v[0] == v[1]) throw ParseError(no, "loops are not allowed");
    arcs.emplace_back(v[0], v[1]);
  }
  return Graph::from_arcs(std::move(arcs));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
}

} // namespace surfgeo
