#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "topo/perm4.hpp"

namespace topo {

// The 6 edges of a tetrahedron, indexed by ascending vertex pairs.
inline constexpr int kEdgeEnds[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                        {1, 2}, {1, 3}, {2, 3}};

// Edge index of the pair {a,b}, a != b.
inline int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[a][b];
}

struct Gluing {
  int tet = -1;
  Perm4 perm;  // images of the four vertex labels; perm(face) is the target face

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

// Gluing table of tetrahedra. Face i of a tetrahedron is the face opposite
// vertex i. Immutable by convention once built.
struct Triangulation {
  int tet_count = 0;
  // glue[t][f]: nullopt for a boundary face.
  std::vector<std::array<std::optional<Gluing>, 4>> glue;

  static Triangulation empty(int tets) {
    Triangulation t;
    t.tet_count = tets;
    t.glue.resize(tets);
    return t;
  }

  const std::optional<Gluing>& gluing(int tet, int face) const {
    return glue[tet][face];
  }

  bool is_boundary(int tet, int face) const { return !glue[tet][face]; }

  void set_gluing(int t, int f, int u, int j, const Perm4& p);

  int boundary_face_count() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

// Equivalence classes of per-tetrahedron cells under the face pairings.
// Cell ids: vertex 4t+v, edge 6t+e, face 4t+f.
struct Skeleton {
  std::vector<int> vertex_class;
  std::vector<int> edge_class;
  std::vector<int> face_class;
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
  int tet_count = 0;

  int vclass(int tet, int v) const { return vertex_class[4 * tet + v]; }
  int eclass(int tet, int a, int b) const {
    return edge_class[6 * tet + edge_index(a, b)];
  }
  int fclass(int tet, int f) const { return face_class[4 * tet + f]; }
};

Triangulation parse_triangulation(const std::string& text);
std::string serialize_triangulation(const Triangulation& t);

// Lists every invariant violation; empty iff valid.
std::vector<std::string> validate(const Triangulation& t);

void require_valid(const Triangulation& t);

Skeleton compute_skeleton(const Triangulation& t);

// Boundary components, each a sorted list of boundary face ids (4t+f),
// ordered by smallest face id.
std::vector<std::vector<int>> boundary_components(const Triangulation& t);

// Cones the given boundary component: one new vertex and one new
// tetrahedron per boundary face of the component.
Triangulation cone_boundary(const Triangulation& t, int component);

// Cones every boundary component; the result is closed.
Triangulation cone_all_boundary(const Triangulation& t);

}  // namespace topo
