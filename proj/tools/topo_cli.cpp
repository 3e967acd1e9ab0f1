#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topo/enumerate.hpp"
#include "topo/normal.hpp"
#include "topo/prism.hpp"
#include "topo/refine.hpp"
#include "topo/surface.hpp"
#include "topo/triangulation.hpp"
#include "topo/util.hpp"
#include "topo/verify.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw topo::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw topo::Error("cannot write " + path);
  out << text;
}

topo::Triangulation load_tri(const std::string& path) {
  auto t = topo::parse_triangulation(slurp(path));
  topo::require_valid(t);
  return t;
}

// A refinement map on disk is its source, its scaling function, and the
// resulting target for cross-checking; the map itself is reconstructed by
// re-running the (deterministic) refinement.
struct LoadedMap {
  topo::Triangulation source;
  topo::Triangulation target;
  topo::RefinementMap map;
};

LoadedMap load_map(const std::string& dir) {
  LoadedMap m;
  m.source = load_tri(dir + "/source.tri");
  auto f = topo::parse_scaling(m.source, slurp(dir + "/scaling.txt"));
  auto [target, map] = topo::refine_scaled(m.source, f);
  m.map = std::move(map);
  topo::Triangulation stored = load_tri(dir + "/target.tri");
  if (topo::serialize_triangulation(stored) !=
      topo::serialize_triangulation(target))
    throw topo::Error("map directory " + dir +
                      ": target.tri does not match source + scaling");
  m.target = std::move(target);
  return m;
}

void write_map(const std::string& dir, const topo::Triangulation& source,
               const topo::ScalingFunction& f,
               const topo::Triangulation& target) {
  fs::create_directories(dir);
  spit(dir + "/source.tri", topo::serialize_triangulation(source));
  spit(dir + "/scaling.txt", topo::serialize_scaling(f));
  spit(dir + "/target.tri", topo::serialize_triangulation(target));
}

std::vector<int> parse_support(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

int emit_report(const topo::VerificationReport& r, bool no_timing) {
  std::cout << r.to_string(!no_timing);
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal-surface toolkit"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing,
               "omit timing fields from verification reports");

  std::string tri_path, surface_path, vector_path, map_dir, out_dir,
      scale_path, support_path;
  int uniform = -1, component = -1, depth = 2, scale_n = 2;
  long long max_w1 = 6;
  bool all = false, closed = false;

  auto* validate = app.add_subcommand("validate", "check a triangulation file");
  validate->add_option("file", tri_path)->required();

  auto* skeleton = app.add_subcommand("skeleton", "print skeleton counts");
  skeleton->add_option("file", tri_path)->required();

  auto* refine = app.add_subcommand("refine", "refine and write a map directory");
  refine->add_option("file", tri_path)->required();
  auto* scale_opt = refine->add_option("--scale", scale_path, "scaling file");
  refine->add_option("--uniform", uniform, "refine every tet N times")
      ->excludes(scale_opt);
  refine->add_option("--out", out_dir, "map directory to write")->required();

  auto* cone = app.add_subcommand("cone", "cone boundary components");
  cone->add_option("file", tri_path)->required();
  cone->add_option("--component", component, "boundary component index");
  cone->add_flag("--all", all, "cone every boundary component");

  auto* prism = app.add_subcommand("prism", "build the prism over a surface");
  prism->add_option("surface", surface_path)->required();
  std::string canonical_out;
  prism->add_option("--canonical", canonical_out,
                    "also write the canonical vector to this file");

  auto* orient = app.add_subcommand("orient", "remove cyclic triangles");
  orient->add_option("surface", surface_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list admissible vectors");
  enumerate->add_option("file", tri_path)->required();
  enumerate->add_option("--max-w1", max_w1, "weight cap")->required();
  enumerate->add_flag("--closed", closed, "only vectors avoiding the boundary");
  enumerate->add_option("--support", support_path,
                        "file of tet indices allowed to be nonzero");

  auto* push = app.add_subcommand("push", "push a vector through a map");
  push->add_option("--map", map_dir)->required();
  push->add_option("vector", vector_path)->required();

  auto* classify = app.add_subcommand("classify", "pull a vector back through a map");
  classify->add_option("--map", map_dir)->required();
  classify->add_option("vector", vector_path)->required();

  auto* weight_cmd = app.add_subcommand("weight", "PL-area of a vector");
  weight_cmd->add_option("file", tri_path)->required();
  weight_cmd->add_option("vector", vector_path)->required();

  auto* vt1 = app.add_subcommand("verify-theorem1", "push/classify bijection check");
  vt1->add_option("file", tri_path)->required();
  vt1->add_option("--scale", scale_path, "scaling file")->required();
  vt1->add_option("--max-w1", max_w1, "weight cap")->capture_default_str();

  auto* vw = app.add_subcommand("verify-weights", "disk weight growth check");
  vw->add_option("--depth", depth, "refinement depth")->capture_default_str();

  auto* vp = app.add_subcommand("verify-prism", "canonical-surface uniqueness check");
  vp->add_option("surface", surface_path)->required();
  vp->add_option("--max-w1", max_w1, "weight cap")->capture_default_str();

  auto* vo = app.add_subcommand("verify-outside", "exterior weight bound check");
  vo->add_option("surface", surface_path)->required();
  vo->add_option("--scale", scale_n, "refinement scale n")->capture_default_str();
  vo->add_option("--max-w1", max_w1, "weight cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      topo::Triangulation t = load_tri(tri_path);
      std::cout << "ok: " << t.tet_count << " tets\n";
      return 0;
    }
    if (*skeleton) {
      topo::Triangulation t = load_tri(tri_path);
      topo::Skeleton s = topo::compute_skeleton(t);
      std::cout << "tets " << t.tet_count << "\nvertices " << s.vertex_count
                << "\nedges " << s.edge_count << "\nfaces " << s.face_count
                << "\nboundary_components "
                << topo::boundary_components(t).size() << "\n";
      return 0;
    }
    if (*refine) {
      topo::Triangulation t = load_tri(tri_path);
      topo::ScalingFunction f;
      if (!scale_path.empty())
        f = topo::parse_scaling(t, slurp(scale_path));
      else if (uniform >= 0)
        f.assign(t.tet_count, uniform);
      else
        throw topo::Error("refine: need --scale or --uniform");
      auto [target, map] = topo::refine_scaled(t, f);
      write_map(out_dir, t, f, target);
      std::cout << "wrote " << out_dir << " (" << target.tet_count
                << " tets)\n";
      return 0;
    }
    if (*cone) {
      topo::Triangulation t = load_tri(tri_path);
      topo::Triangulation result =
          all ? topo::cone_all_boundary(t)
              : topo::cone_boundary(t, component < 0 ? 0 : component);
      std::cout << topo::serialize_triangulation(result);
      return 0;
    }
    if (*prism) {
      topo::SurfaceTriangulation s = topo::parse_surface(slurp(surface_path));
      topo::PrismComplex p = topo::build_prism(s);
      std::cout << topo::serialize_triangulation(p.tri);
      if (!canonical_out.empty())
        spit(canonical_out, topo::serialize_normal_vector(p.canonical));
      return 0;
    }
    if (*orient) {
      topo::SurfaceTriangulation s = topo::parse_surface(slurp(surface_path));
      int iterations = 0;
      topo::SurfaceTriangulation oriented = topo::orient_acyclic(s, &iterations);
      std::cerr << "subdivided " << iterations << " cyclic triangles\n";
      std::cout << topo::serialize_surface(oriented);
      return 0;
    }
    if (*enumerate) {
      topo::EnumerationQuery q{load_tri(tri_path), max_w1};
      q.closed_only = closed;
      if (!support_path.empty()) q.support = parse_support(slurp(support_path));
      auto vs = topo::enumerate_admissible(q);
      std::cout << topo::serialize_enumeration(vs);
      return 0;
    }
    if (*push) {
      LoadedMap m = load_map(map_dir);
      topo::NormalVector v =
          topo::parse_normal_vector(m.source, slurp(vector_path));
      topo::require_admissible(m.source, v);
      std::cout << topo::serialize_normal_vector(
          topo::push_forward(m.map, v));
      return 0;
    }
    if (*classify) {
      LoadedMap m = load_map(map_dir);
      topo::NormalVector v =
          topo::parse_normal_vector(m.target, slurp(vector_path));
      topo::require_admissible(m.target, v);
      topo::PullbackResult r = topo::classify_pullback(m.map, v);
      if (!r.ok) {
        std::cout << "not classifiable: " << r.diagnostic << "\n";
        return 1;
      }
      std::cout << "e_spheres " << r.total_e_spheres() << "\n";
      for (const auto& e : r.e_spheres)
        std::cout << "round " << e.round << " tet " << e.source_tet << " x"
                  << e.count << "\n";
      std::cout << topo::serialize_normal_vector(r.source);
      return 0;
    }
    if (*weight_cmd) {
      topo::Triangulation t = load_tri(tri_path);
      topo::NormalVector v = topo::parse_normal_vector(t, slurp(vector_path));
      topo::require_admissible(t, v);
      topo::PLArea a = topo::weight(t, v);
      std::cout << "w1 " << a.w1 << "\nw2 " << a.w2 << "\n";
      return 0;
    }
    if (*vt1) {
      topo::Triangulation t = load_tri(tri_path);
      auto f = topo::parse_scaling(t, slurp(scale_path));
      return emit_report(topo::verify_theorem1(t, f, max_w1), no_timing);
    }
    if (*vw) {
      return emit_report(topo::verify_lemma_weights(depth), no_timing);
    }
    if (*vp) {
      topo::SurfaceTriangulation s = topo::parse_surface(slurp(surface_path));
      return emit_report(topo::verify_prism(s, max_w1), no_timing);
    }
    if (*vo) {
      topo::SurfaceTriangulation s = topo::parse_surface(slurp(surface_path));
      topo::PrismComplex p = topo::build_prism(s);
      return emit_report(topo::verify_outside(p, scale_n, max_w1), no_timing);
    }
  } catch (const topo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
