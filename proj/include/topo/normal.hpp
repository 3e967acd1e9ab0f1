#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topo/triangulation.hpp"

namespace topo {

// Quad slot (1..3) of the quad type separating the pair {a,b} from the
// opposite pair. Slot k separates {0,k} | rest.
inline int quad_slot(int a, int b) {
  if (a == 0 || b == 0) return a + b;
  return 6 - a - b;  // the partner of 0 in the complementary pair
}

// 7 non-negative integers per tetrahedron: t0 t1 t2 t3 q1 q2 q3.
struct NormalVector {
  std::vector<int64_t> c;

  static NormalVector zero(const Triangulation& t) {
    return NormalVector{std::vector<int64_t>(7 * t.tet_count, 0)};
  }

  int tets() const { return static_cast<int>(c.size()) / 7; }
  int64_t tri(int tet, int v) const { return c[7 * tet + v]; }
  int64_t quad(int tet, int k) const { return c[7 * tet + 3 + k]; }
  int64_t& tri(int tet, int v) { return c[7 * tet + v]; }
  int64_t& quad(int tet, int k) { return c[7 * tet + 3 + k]; }

  bool is_zero() const;

  // Count of arcs linking corner v induced on face f of tet (v != f).
  int64_t arcs(int tet, int face, int v) const {
    return tri(tet, v) + quad(tet, quad_slot(v, face));
  }

  // Intersections with the edge {a,b} of tet.
  int64_t crossings(int tet, int a, int b) const {
    int64_t n = tri(tet, a) + tri(tet, b);
    int skip = quad_slot(a, b);
    for (int k = 1; k <= 3; ++k)
      if (k != skip) n += quad(tet, k);
    return n;
  }

  NormalVector& operator+=(const NormalVector& o);
  friend NormalVector operator+(NormalVector a, const NormalVector& b) {
    a += b;
    return a;
  }
  friend bool operator==(const NormalVector&, const NormalVector&) = default;
  friend bool operator<(const NormalVector& a, const NormalVector& b) {
    return a.c < b.c;
  }
};

// Ordered-pair PL-area, compared lexicographically.
struct PLArea {
  int64_t w1 = 0;  // intersections with the 1-skeleton
  int64_t w2 = 0;  // normal arcs in the 2-skeleton

  friend bool operator==(const PLArea&, const PLArea&) = default;
  friend bool operator<(const PLArea& a, const PLArea& b) {
    return a.w1 != b.w1 ? a.w1 < b.w1 : a.w2 < b.w2;
  }
};

// One matching equation: sum of coordinates in `plus` equals sum in `minus`.
// Coordinates are flat indices into NormalVector::c.
struct MatchingEquation {
  int face_tet, face;     // the glued face, seen from the lower incidence
  int corner;             // linked corner on that side
  std::vector<int> plus;  // this side's arc coordinates
  std::vector<int> minus; // the other side's
};

// One equation per (glued face class, arc type).
std::vector<MatchingEquation> matching_equations(const Triangulation& t);

bool is_admissible(const Triangulation& t, const NormalVector& v);

void require_admissible(const Triangulation& t, const NormalVector& v);

PLArea weight(const Triangulation& t, const NormalVector& v,
              const Skeleton* skel = nullptr);

struct SurfaceComponent {
  NormalVector vector;
  int64_t euler = 0;  // V - E + F of the component's cell complex
};

// Instantiates v as individual disks, glues arcs across glued faces in
// nested order, and returns the connected components.
std::vector<SurfaceComponent> components(const Triangulation& t,
                                         const NormalVector& v);

bool is_connected(const Triangulation& t, const NormalVector& v);

bool is_vertex_linking(const Triangulation& t, const NormalVector& v,
                       int vertex_class, const Skeleton* skel = nullptr);

// The vertex-linking sphere of the given vertex class.
NormalVector vertex_link(const Triangulation& t, int vertex_class,
                         const Skeleton* skel = nullptr);

bool supported_in(const Triangulation& t, const NormalVector& v,
                  const std::vector<int>& tets);

// True iff v induces no arc on any boundary face of t.
bool avoids_boundary(const Triangulation& t, const NormalVector& v);

// Normal vector file: one line per tetrahedron, `t0 t1 t2 t3 q1 q2 q3`.
NormalVector parse_normal_vector(const Triangulation& t, const std::string& text);
std::string serialize_normal_vector(const NormalVector& v);

}  // namespace topo
