#include "topo/prism.hpp"

#include <algorithm>
#include <set>

#include "topo/util.hpp"

namespace topo {

namespace {

// Ordered positions of the local vertices: v0 is the tail of two directed
// edges, v2 the head of two.
std::array<int, 3> vertex_order(const SurfaceTriangulation& s, int t) {
  if (is_cyclic_triangle(s, t))
    throw Error("cyclic triangle " + std::to_string(t) +
                " (run orient_acyclic first)");
  int out_deg[3] = {0, 0, 0};
  for (const auto& [tail, head] : directed_edges(s, t)) ++out_deg[tail];
  std::array<int, 3> ordered{};  // ordered[i] = local vertex at position i
  for (int v = 0; v < 3; ++v) ordered[2 - out_deg[v]] = v;
  return ordered;
}

}  // namespace

PrismComplex build_prism(const SurfaceTriangulation& s) {
  require_valid(s);
  if (s.triangle_count == 0) throw Error("empty surface");

  int vclass_count = 0;
  std::vector<int> vclass = surface_vertex_classes(s, &vclass_count);
  for (int t = 0; t < s.triangle_count; ++t)
    for (int k = 0; k < 3; ++k) {
      auto [a, b] = SurfaceTriangulation::slot_ends(k);
      if (vclass[3 * t + a] == vclass[3 * t + b])
        throw Error("edge with identified endpoints is not supported");
    }

  PrismComplex p;
  p.tri = Triangulation::empty(3 * s.triangle_count);
  p.canonical = NormalVector::zero(p.tri);

  // Geometric vertex per (tet, label): 2*class + level, level 1 = F x {1}.
  std::vector<std::array<int, 4>> geom(3 * s.triangle_count);
  std::vector<std::array<int, 3>> pos_of(s.triangle_count);  // local -> position

  for (int t = 0; t < s.triangle_count; ++t) {
    auto ordered = vertex_order(s, t);
    int V[3];
    for (int i = 0; i < 3; ++i) {
      V[i] = vclass[3 * t + ordered[i]];
      pos_of[t][ordered[i]] = i;
    }
    int d0 = 3 * t, d1 = 3 * t + 1, d2 = 3 * t + 2;
    p.blocks.push_back({d0, d1, d2});
    auto lo = [&](int i) { return 2 * V[i]; };
    auto hi = [&](int i) { return 2 * V[i] + 1; };
    geom[d0] = {lo(0), hi(0), hi(1), hi(2)};
    geom[d1] = {lo(0), lo(1), hi(1), hi(2)};
    geom[d2] = {lo(0), lo(1), lo(2), hi(2)};
    p.tri.set_gluing(d0, 1, d1, 1, Perm4::identity());
    p.tri.set_gluing(d1, 2, d2, 2, Perm4::identity());
    // F x {0}: triangle above v0, quad along the edge v0 v1, triangle
    // below w2.
    p.canonical.tri(d0, 0) = 1;
    p.canonical.quad(d1, quad_slot(0, 1)) = 1;
    p.canonical.tri(d2, 3) = 1;
  }
  for (int i = 0; i < 3 * s.triangle_count; ++i) p.prism_tets.push_back(i);

  // Side faces of the square over a directed triangle edge, keyed by the
  // ordered positions of its endpoints: {lower tet/face, upper tet/face}.
  auto side_faces = [&](int t, int pos_tail, int pos_head) {
    const auto& b = p.blocks[t];
    struct Side {
      int lower_tet, lower_face, upper_tet, upper_face;
    };
    if (pos_tail == 0 && pos_head == 1) return Side{b.d1, 3, b.d0, 3};
    if (pos_tail == 1 && pos_head == 2) return Side{b.d2, 0, b.d1, 0};
    if (pos_tail == 0 && pos_head == 2) return Side{b.d2, 1, b.d0, 2};
    throw Error("edge direction disagrees with the vertex order");
  };

  auto glue_by_geometry = [&](int ta, int fa, int tb, int fb) {
    Perm4 q;
    for (int l = 0; l < 4; ++l) {
      if (l == fa) {
        q.img[l] = static_cast<uint8_t>(fb);
        continue;
      }
      int m = -1;
      for (int x = 0; x < 4; ++x)
        if (x != fb && geom[tb][x] == geom[ta][l]) m = x;
      if (m < 0) throw Error("side faces do not share their vertices");
      q.img[l] = static_cast<uint8_t>(m);
    }
    p.tri.set_gluing(ta, fa, tb, fb, q);
  };

  for (const auto& cls : surface_edge_classes(s)) {
    if (cls.size() != 2) continue;  // boundary edge: side squares stay open
    auto [t1, k1] = cls[0];
    auto [t2, k2] = cls[1];
    auto dir1 = directed_edges(s, t1)[k1];
    auto dir2 = directed_edges(s, t2)[k2];
    auto s1 = side_faces(t1, pos_of[t1][dir1.first], pos_of[t1][dir1.second]);
    auto s2 = side_faces(t2, pos_of[t2][dir2.first], pos_of[t2][dir2.second]);
    glue_by_geometry(s1.lower_tet, s1.lower_face, s2.lower_tet, s2.lower_face);
    glue_by_geometry(s1.upper_tet, s1.upper_face, s2.upper_tet, s2.upper_face);
  }

  require_valid(p.tri);
  return p;
}

HeavyExterior build_heavy_exterior(const PrismComplex& p, int n) {
  if (n < 0) throw Error("scale must be non-negative");
  const Triangulation& t = p.tri;
  Skeleton skel = compute_skeleton(t);
  for (const auto& comp : boundary_components(t)) {
    std::set<int> vset, eset;
    for (int id : comp) {
      int tet = id / 4, face = id % 4;
      for (int v = 0; v < 4; ++v)
        if (v != face) vset.insert(skel.vclass(tet, v));
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (a != face && b != face) eset.insert(skel.eclass(tet, a, b));
    }
    int64_t chi = static_cast<int64_t>(vset.size()) -
                  static_cast<int64_t>(eset.size()) +
                  static_cast<int64_t>(comp.size());
    if (chi != 2)
      throw Error("boundary component is not a sphere; coning unavailable");
  }

  Triangulation closed = cone_all_boundary(t);
  ScalingFunction f(closed.tet_count, n);
  for (int i : p.prism_tets) f[i] = 0;
  auto [refined, map] = refine_scaled(closed, f);

  HeavyExterior out;
  out.tri = std::move(refined);
  out.map = std::move(map);
  for (int i : p.prism_tets) out.prism_tets.push_back(forward_index(out.map, i));
  return out;
}

}  // namespace topo
