#pragma once

#include <array>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "topo/surface.hpp"
#include "topo/triangulation.hpp"
#include "topo/util.hpp"

namespace fixtures {

inline topo::Triangulation single_tet() {
  return topo::Triangulation::empty(1);
}

// Two tetrahedra, face i of one glued to face i of the other by the
// identity: a closed 3-sphere triangulation.
inline topo::Triangulation doubled_tet() {
  topo::Triangulation t = topo::Triangulation::empty(2);
  for (int f = 0; f < 4; ++f)
    t.set_gluing(0, f, 1, f, topo::Perm4::identity());
  return t;
}

// Two tets glued along one face by a non-identity permutation.
inline topo::Triangulation two_chain() {
  topo::Triangulation t = topo::Triangulation::empty(2);
  // Face 0 of tet 0 onto face 1 of tet 1; swaps labels 0 and 1.
  t.set_gluing(0, 0, 1, 1, topo::Perm4{{1, 0, 2, 3}});
  return t;
}

// Three tets in a row.
inline topo::Triangulation three_chain() {
  topo::Triangulation t = topo::Triangulation::empty(3);
  t.set_gluing(0, 3, 1, 3, topo::Perm4::identity());
  t.set_gluing(1, 2, 2, 2, topo::Perm4::identity());
  return t;
}

// Builds a surface from global vertex triples; edges are matched by their
// unordered vertex pairs (each pair may appear at most twice). Edge classes
// are directed from the smaller global vertex to the larger.
inline topo::SurfaceTriangulation surface_from_faces(
    const std::vector<std::array<int, 3>>& faces) {
  topo::SurfaceTriangulation s =
      topo::SurfaceTriangulation::empty(static_cast<int>(faces.size()));
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edges;
  for (int t = 0; t < s.triangle_count; ++t)
    for (int k = 0; k < 3; ++k) {
      auto [a, b] = topo::SurfaceTriangulation::slot_ends(k);
      int x = faces[t][a], y = faces[t][b];
      edges[{std::min(x, y), std::max(x, y)}].push_back({t, k});
    }
  for (const auto& [pair, inc] : edges) {
    if (inc.size() == 1) continue;
    if (inc.size() != 2) throw topo::Error("edge with more than 2 incidences");
    auto [t1, k1] = inc[0];
    auto [t2, k2] = inc[1];
    auto [a1, b1] = topo::SurfaceTriangulation::slot_ends(k1);
    auto [a2, b2] = topo::SurfaceTriangulation::slot_ends(k2);
    bool aligned = (faces[t1][a1] < faces[t1][b1]) ==
                   (faces[t2][a2] < faces[t2][b2]);
    s.set_gluing(t1, k1, t2, k2, aligned);
    // Keep the direction bit of the first incidence; make the partner agree.
    s.edge_dir[t2][k2] = aligned ? s.edge_dir[t1][k1] : !s.edge_dir[t1][k1];
  }
  return s;
}

// The boundary sphere of a tetrahedron: 4 triangles, face i opposite
// vertex i, locals in ascending global order.
inline topo::SurfaceTriangulation tetra_sphere() {
  return surface_from_faces(
      {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

// The octahedron sphere: apexes 0 and 5, equator 1 2 3 4.
inline topo::SurfaceTriangulation octahedron_sphere() {
  return surface_from_faces({{0, 1, 2},
                             {0, 2, 3},
                             {0, 3, 4},
                             {0, 1, 4},
                             {1, 2, 5},
                             {2, 3, 5},
                             {3, 4, 5},
                             {1, 4, 5}});
}

// The 9-vertex torus: 3x3 grid with wrap-around, squares split by the
// (i,j)-(i+1,j+1) diagonal; 18 triangles.
inline topo::SurfaceTriangulation torus_grid() {
  auto v = [](int i, int j) { return 3 * ((i + 3) % 3) + (j + 3) % 3; };
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int a = v(i, j), b = v(i + 1, j), c = v(i, j + 1), d = v(i + 1, j + 1);
      faces.push_back({a, b, d});
      faces.push_back({a, d, c});
    }
  return surface_from_faces(faces);
}

// Randomly reorients every edge class of s in place.
inline void random_orientation(topo::SurfaceTriangulation& s,
                               std::mt19937& rng) {
  for (const auto& cls : topo::surface_edge_classes(s))
    if (rng() & 1) topo::flip_edge_class(s, cls[0].first, cls[0].second);
}

}  // namespace fixtures
