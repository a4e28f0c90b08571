#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "surfgeo/duality.hpp"
#include "surfgeo/embedding.hpp"
#include "surfgeo/generation.hpp"
#include "surfgeo/io.hpp"
#include "surfgeo/reembed.hpp"
#include "surfgeo/surface.hpp"

namespace {

using namespace surfgeo;

const char* yesno(bool b) { return b ? "true" : "false"; }

TargetSurface parse_target(const std::string& name) {
  if (name == "projective" || name == "projective-plane") return TargetSurface::projective_plane;
  if (name == "torus") return TargetSurface::torus;
  if (name == "klein" || name == "klein-bottle") return TargetSurface::klein_bottle;
  throw CLI::ValidationError("--target", "unknown target '" + name + "'");
}

void cmd_info(std::ostream& out, const SimplicialSurface& s) {
  SurfaceClass cls = classify(s);
  out << "chi=" << cls.euler_characteristic << '\n'
      << "orientable=" << yesno(cls.orientable) << '\n'
      << "genus=" << cls.genus << '\n'
      << "class=" << to_string(cls.label) << '\n'
      << "vertex_faithful=" << yesno(is_vertex_faithful(s)) << '\n'
      << "n_waists_3=" << find_waists(s, 3).size() << '\n'
      << "n_waists_4=" << find_waists(s, 4).size() << '\n';
  auto [fg, fmap] = face_graph(s);
  out << "face_graph_cyclically_4_connected=" << yesno(is_cyclically_k_arc_connected(fg, 4))
      << '\n'
      << "face_graph_cyclically_5_connected=" << yesno(is_cyclically_k_arc_connected(fg, 5))
      << '\n';
}

void write_surface_block(std::ostream& out, const SimplicialSurface& s) {
  SurfaceClass cls = classify(s);
  out << "# chi=" << cls.euler_characteristic << " class=" << to_string(cls.label)
      << " vertex_faithful=" << yesno(is_vertex_faithful(s)) << '\n';
  write_surface_umbrellas(out, s);
}

void cmd_embed(std::ostream& out, const Graph& g, bool peripheral_only, int min_chi,
               std::size_t max_cycles) {
  std::vector<SimplicialSurface> surfaces;
  if (peripheral_only) {
    surfaces = enumerate_vertex_faithful_surfaces(g, max_cycles);
  } else {
    std::map<std::string, SimplicialSurface> seen;
    for (const auto& cdc : enumerate_cdcs(g, max_cycles)) {
      SimplicialSurface s = surface_from_cycles(g, cdc);
      seen.emplace(canonical_form(s), std::move(s));
    }
    for (auto& [form, s] : seen) surfaces.push_back(std::move(s));
  }
  bool first = true;
  for (const auto& s : surfaces) {
    if (euler_characteristic(s) < min_chi) continue;
    if (!first) out << '\n';
    first = false;
    write_surface_block(out, s);
  }
}

void cmd_reembed(std::ostream& out, const SimplicialSurface& s, TargetSurface target,
                 bool oracle, bool count_only, std::size_t max_cycles) {
  if (oracle) {
    auto surfaces = oracle_reembeddings(s, target, max_cycles);
    if (count_only) {
      out << surfaces.size() << '\n';
      return;
    }
    bool first = true;
    for (const auto& r : surfaces) {
      if (!first) out << '\n';
      first = false;
      out << "class target=" << to_string(target) << " oracle\n";
      write_surface_umbrellas(out, r);
    }
    return;
  }
  auto classes = enumerate_reembeddings(s, target);
  if (count_only) {
    out << classes.size() << '\n';
    return;
  }
  bool first = true;
  for (const auto& c : classes) {
    if (!first) out << '\n';
    first = false;
    out << "class target=" << to_string(target) << " pattern=" << c.pattern
        << " orbit_size=" << c.orbit_size << " nodes={";
    for (std::size_t i = 0; i < c.nodes.size(); ++i)
      out << (i ? "," : "") << c.nodes[i];
    out << "}\n";
    write_surface_umbrellas(out, c.surface);
  }
}

void cmd_table(std::ostream& out, int max_faces) {
  out << "n\tS\tP\tT\tK\n";
  for (int n = 4; n <= max_faces; n += 2) {
    auto spheres = generate_spheres(n);
    std::size_t p = 0, t = 0, k = 0;
    for (const auto& s : spheres) {
      p += count_reembedding_orbits(s, TargetSurface::projective_plane);
      t += count_reembedding_orbits(s, TargetSurface::torus);
      k += count_reembedding_orbits(s, TargetSurface::klein_bottle);
    }
    out << n << '\t' << spheres.size() << '\t' << p << '\t' << t << '\t' << k << '\n';
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicial surfaces, cubic face graphs, and their re-embeddings"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("-o,--output", out_path, "write output to this file instead of stdout");

  std::string in_path, kind = "face", target_name, family;
  int min_chi = -1000000, faces = 0, family_param = 3, max_faces = 14;
  bool peripheral_only = false, oracle = false, count_only = false;
  std::size_t max_cycles = 50000;

  auto* validate = app.add_subcommand("validate", "check a surface file");
  validate->add_option("file", in_path)->required();

  auto* info = app.add_subcommand("info", "surface invariants as key=value lines");
  info->add_option("file", in_path)->required();

  auto* graph_cmd = app.add_subcommand("graph", "face or edge graph of a surface");
  graph_cmd->add_option("file", in_path)->required();
  graph_cmd->add_option("--kind", kind, "face | edge")->check(CLI::IsMember({"face", "edge"}));

  auto* embed = app.add_subcommand("embed", "surfaces carried by a cubic graph");
  embed->add_option("file", in_path)->required();
  embed->add_flag("--peripheral-only", peripheral_only,
                  "restrict to vertex-faithful surfaces (peripheral cycles)");
  embed->add_option("--min-chi", min_chi, "drop surfaces below this Euler characteristic");
  embed->add_option("--max-cycles", max_cycles, "simple-cycle guardrail");

  auto* reembed = app.add_subcommand("reembed", "re-embeddings of a vertex-faithful sphere");
  reembed->add_option("file", in_path)->required();
  reembed->add_option("--target", target_name, "projective | torus | klein")->required();
  reembed->add_flag("--oracle", oracle, "exhaustive cycle-double-cover search");
  reembed->add_flag("--count", count_only, "print only the number of classes");
  reembed->add_option("--max-cycles", max_cycles, "simple-cycle guardrail (oracle mode)");

  auto* generate = app.add_subcommand("generate", "vertex-faithful spheres");
  auto* faces_opt = generate->add_option("--faces", faces, "all spheres with this face count");
  auto* family_opt =
      generate->add_option("--family", family, "double-ngon | prop45 (see --param)");
  generate->add_option("--param", family_param, "family parameter (rim size / n)");
  faces_opt->excludes(family_opt);

  auto* table = app.add_subcommand("table", "re-embedding counts per face count (TSV)");
  table->add_option("--max-faces", max_faces, "largest face count, even");

  // let the global -o/--output be given after the subcommand as well
  for (CLI::App* sub : {validate, info, graph_cmd, embed, reembed, generate, table})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage errors exit 2
  }

  std::ostringstream buffer;
  try {
    if (validate->parsed()) {
      SimplicialSurface s = read_surface_file(in_path);
      buffer << "valid " << to_string(classify(s).label) << " with " << s.num_faces()
             << " faces\n";
    } else if (info->parsed()) {
      cmd_info(buffer, read_surface_file(in_path));
    } else if (graph_cmd->parsed()) {
      SimplicialSurface s = read_surface_file(in_path);
      auto [g, map] = kind == "face" ? face_graph(s) : edge_graph(s);
      write_graph(buffer, g);
    } else if (embed->parsed()) {
      cmd_embed(buffer, read_graph_file(in_path), peripheral_only, min_chi, max_cycles);
    } else if (reembed->parsed()) {
      cmd_reembed(buffer, read_surface_file(in_path), parse_target(target_name), oracle,
                  count_only, max_cycles);
    } else if (generate->parsed()) {
      std::vector<SimplicialSurface> out;
      if (*family_opt) {
        if (family == "double-ngon")
          out.push_back(double_ngon(family_param));
        else if (family == "prop45")
          out.push_back(prop45_family(family_param));
        else
          throw CLI::ValidationError("--family", "unknown family '" + family + "'");
      } else if (*faces_opt) {
        out = generate_spheres(faces);
      } else {
        throw CLI::RequiredError("--faces or --family");
      }
      bool first = true;
      for (const auto& s : out) {
        if (!first) buffer << '\n';
        first = false;
        write_surface_faces(buffer, s);
      }
    } else if (table->parsed()) {
      cmd_table(buffer, max_faces);
    }
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 1;
    }
    f << buffer.str();
  }
  return 0;
}
