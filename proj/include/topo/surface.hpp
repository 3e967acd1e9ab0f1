#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topo/normal.hpp"
#include "topo/refine.hpp"
#include "topo/triangulation.hpp"

namespace topo {

// Edge slot k of a triangle is the edge opposite local vertex k; its
// endpoints are the other two local vertices.
struct SurfaceGluing {
  int tri = -1;
  int slot = -1;
  // True when the ascending-local-label directions of the two incidences
  // point the same way along the identified edge.
  bool aligned = true;

  friend bool operator==(const SurfaceGluing&, const SurfaceGluing&) = default;
};

// 2-dimensional triangulation with a direction chosen on every edge class.
// Directions are stored per incidence: edge_dir[t][k] is true when the class
// direction agrees with the ascending-local-label direction of slot k.
struct SurfaceTriangulation {
  int triangle_count = 0;
  std::vector<std::array<std::optional<SurfaceGluing>, 3>> glue;
  std::vector<std::array<bool, 3>> edge_dir;

  static SurfaceTriangulation empty(int triangles) {
    SurfaceTriangulation s;
    s.triangle_count = triangles;
    s.glue.resize(triangles);
    s.edge_dir.assign(triangles, {true, true, true});
    return s;
  }

  void set_gluing(int t, int k, int u, int l, bool aligned);

  // Local endpoints of slot k, ascending.
  static std::pair<int, int> slot_ends(int k) {
    return {k == 0 ? 1 : 0, k == 2 ? 1 : 2};
  }
};

std::vector<std::string> validate_surface(const SurfaceTriangulation& s);
void require_valid(const SurfaceTriangulation& s);

// Edge classes as (triangle, slot) incidence lists, ordered by smallest
// incidence; each class has one or two incidences.
std::vector<std::vector<std::pair<int, int>>> surface_edge_classes(
    const SurfaceTriangulation& s);

// Vertex classes of the surface; ids per (triangle, local vertex).
std::vector<int> surface_vertex_classes(const SurfaceTriangulation& s,
                                        int* count = nullptr);

// Flips the direction of the edge class containing (tri, slot).
void flip_edge_class(SurfaceTriangulation& s, int tri, int slot);

// Directed local edges of triangle t: for each slot, (tail, head).
std::array<std::pair<int, int>, 3> directed_edges(const SurfaceTriangulation& s,
                                                  int t);

bool is_cyclic_triangle(const SurfaceTriangulation& s, int t);

// Number of triangles whose three edge directions form a directed cycle.
int count_cyclic(const SurfaceTriangulation& s);

// Subdivides the lowest-indexed cyclic triangle at an interior point, with
// the new edges directed away from it, until no cyclic triangle remains.
// Each step removes exactly one cyclic triangle and adds two triangles.
SurfaceTriangulation orient_acyclic(const SurfaceTriangulation& s,
                                    int* iterations = nullptr);

// File format: `triangles N`, then per triangle three entries
// `j.k:+` / `j.k:-` or `-`. Edge-class directions are implied: each class is
// directed along the ascending-label direction of its first incidence.
SurfaceTriangulation parse_surface(const std::string& text);
std::string serialize_surface(const SurfaceTriangulation& s);

}  // namespace topo
