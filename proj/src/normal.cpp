#include "topo/normal.hpp"

#include <algorithm>
#include <sstream>

#include "topo/util.hpp"

namespace topo {

bool NormalVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; });
}

NormalVector& NormalVector::operator+=(const NormalVector& o) {
  if (c.size() != o.c.size()) throw Error("normal vector size mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

namespace {

// Flat coordinate indices of the three arc types on (tet, face).
std::vector<int> arc_coords(int tet, int face, int v) {
  return {7 * tet + v, 7 * tet + 3 + quad_slot(v, face)};
}

}  // namespace

std::vector<MatchingEquation> matching_equations(const Triangulation& t) {
  std::vector<MatchingEquation> eqs;
  for (int i = 0; i < t.tet_count; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[i][f];
      if (!g) continue;
      int u = g->tet, j = g->perm(f);
      int self = 4 * i + f, other = 4 * u + j;
      if (self > other) continue;  // handled from the lower incidence
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        int w = g->perm(v);
        if (self == other) {
          // Face glued to itself: equate corners across the permutation.
          if (v >= w) continue;
        }
        MatchingEquation eq;
        eq.face_tet = i;
        eq.face = f;
        eq.corner = v;
        eq.plus = arc_coords(i, f, v);
        eq.minus = arc_coords(u, j, w);
        eqs.push_back(std::move(eq));
      }
    }
  }
  return eqs;
}

bool is_admissible(const Triangulation& t, const NormalVector& v) {
  if (static_cast<int>(v.c.size()) != 7 * t.tet_count)
    throw Error("normal vector length does not match triangulation");
  for (int64_t x : v.c)
    if (x < 0) return false;
  for (int i = 0; i < t.tet_count; ++i) {
    int quads = 0;
    for (int k = 1; k <= 3; ++k)
      if (v.quad(i, k) > 0) ++quads;
    if (quads > 1) return false;
  }
  for (const auto& eq : matching_equations(t)) {
    int64_t lhs = 0, rhs = 0;
    for (int c : eq.plus) lhs += v.c[c];
    for (int c : eq.minus) rhs += v.c[c];
    if (lhs != rhs) return false;
  }
  return true;
}

void require_admissible(const Triangulation& t, const NormalVector& v) {
  if (!is_admissible(t, v)) throw Error("normal vector is not admissible");
}

PLArea weight(const Triangulation& t, const NormalVector& v,
              const Skeleton* skel) {
  require_admissible(t, v);
  Skeleton local;
  if (!skel) {
    local = compute_skeleton(t);
    skel = &local;
  }
  PLArea w;
  std::vector<char> seen_e(skel->edge_count, 0), seen_f(skel->face_count, 0);
  for (int i = 0; i < t.tet_count; ++i) {
    for (int e = 0; e < 6; ++e) {
      int cls = skel->edge_class[6 * i + e];
      if (seen_e[cls]) continue;
      seen_e[cls] = 1;
      w.w1 += v.crossings(i, kEdgeEnds[e][0], kEdgeEnds[e][1]);
    }
    for (int f = 0; f < 4; ++f) {
      int cls = skel->face_class[4 * i + f];
      if (seen_f[cls]) continue;
      seen_f[cls] = 1;
      for (int c = 0; c < 4; ++c)
        if (c != f) w.w2 += v.arcs(i, f, c);
    }
  }
  return w;
}

namespace {

// Disk instantiation for the component decomposition. Disk kinds 0..3 are
// triangles linking that vertex, 4..6 quads with slot kind-3. Arc ids are
// 4*disk+face, point ids 6*disk+edge; only the slots a disk actually meets
// are used.
struct DiskModel {
  const Triangulation& tri;
  const NormalVector& v;
  std::vector<int> disk_base;            // first disk id per (tet, kind)
  int disk_count = 0;
  std::vector<int> disk_tet, disk_kind;

  DiskModel(const Triangulation& t, const NormalVector& vec) : tri(t), v(vec) {
    disk_base.resize(7 * t.tet_count);
    for (int i = 0; i < t.tet_count; ++i)
      for (int k = 0; k < 7; ++k) {
        disk_base[7 * i + k] = disk_count;
        disk_count += static_cast<int>(v.c[7 * i + k]);
      }
    disk_tet.resize(disk_count);
    disk_kind.resize(disk_count);
    for (int i = 0; i < t.tet_count; ++i)
      for (int k = 0; k < 7; ++k)
        for (int64_t c = 0; c < v.c[7 * i + k]; ++c) {
          disk_tet[disk_base[7 * i + k] + c] = i;
          disk_kind[disk_base[7 * i + k] + c] = k;
        }
  }

  // Disks on face `f` of `tet` whose arc links corner `c`, ordered by
  // distance from the corner (innermost first). Triangle copies nest at the
  // corner; quad copies follow, oriented by the convention that quad copy 0
  // lies nearest the edge of its pair containing vertex 0.
  std::vector<int> arc_order(int tet, int f, int c) const {
    std::vector<int> out;
    int64_t nt = v.tri(tet, c);
    for (int64_t i = 0; i < nt; ++i)
      out.push_back(disk_base[7 * tet + c] + static_cast<int>(i));
    int slot = quad_slot(c, f);
    int64_t nq = v.quad(tet, slot);
    bool ascending = (c == 0 || f == 0);  // {c,f} is the pair containing 0
    for (int64_t i = 0; i < nq; ++i) {
      int64_t copy = ascending ? i : nq - 1 - i;
      out.push_back(disk_base[7 * tet + 3 + slot] + static_cast<int>(copy));
    }
    return out;
  }
};

}  // namespace

std::vector<SurfaceComponent> components(const Triangulation& t,
                                         const NormalVector& v) {
  require_admissible(t, v);
  DiskModel m(t, v);
  UnionFind disks(std::max(m.disk_count, 1));
  UnionFind arcs(std::max(4 * m.disk_count, 1));
  UnionFind pts(std::max(6 * m.disk_count, 1));

  auto glue_arcs = [&](int d1, int f1, int c1, const Perm4& p, int d2, int f2,
                       int c2) {
    arcs.unite(4 * d1 + f1, 4 * d2 + f2);
    disks.unite(d1, d2);
    for (int x = 0; x < 4; ++x) {
      if (x == c1 || x == f1) continue;
      pts.unite(6 * d1 + edge_index(c1, x), 6 * d2 + edge_index(c2, p(x)));
    }
  };

  for (int i = 0; i < t.tet_count; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[i][f];
      if (!g) continue;
      int u = g->tet, j = g->perm(f);
      int self = 4 * i + f, other = 4 * u + j;
      if (self > other) continue;
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        int c2 = g->perm(c);
        if (self == other && c > c2) continue;
        auto side1 = m.arc_order(i, f, c);
        auto side2 = m.arc_order(u, j, c2);
        if (side1.size() != side2.size())
          throw Error("arc counts disagree across a glued face");
        if (self == other && c == c2) {
          // Arcs of this type pair among themselves, outermost to innermost.
          size_t n = side1.size();
          if (n % 2 != 0)
            throw Error("normal arc glued to itself across a self-identified face");
          for (size_t k = 0; k < n / 2; ++k)
            glue_arcs(side1[k], f, c, g->perm, side1[n - 1 - k], j, c2);
          continue;
        }
        for (size_t k = 0; k < side1.size(); ++k)
          glue_arcs(side1[k], f, c, g->perm, side2[k], j, c2);
      }
    }
  }

  // Collect components in order of their smallest disk id.
  std::vector<int> comp_of(std::max(m.disk_count, 1), -1);
  std::vector<SurfaceComponent> out;
  for (int d = 0; d < m.disk_count; ++d) {
    int r = disks.find(d);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(out.size());
      SurfaceComponent sc;
      sc.vector = NormalVector::zero(t);
      out.push_back(std::move(sc));
    }
  }
  std::vector<int64_t> vcount(out.size(), 0), ecount(out.size(), 0),
      fcount(out.size(), 0);
  auto comp_of_disk = [&](int d) { return comp_of[disks.find(d)]; };
  for (int d = 0; d < m.disk_count; ++d) {
    int cid = comp_of_disk(d);
    out[cid].vector.c[7 * m.disk_tet[d] + m.disk_kind[d]] += 1;
    ++fcount[cid];
  }
  std::vector<char> seen_arc(4 * m.disk_count, 0), seen_pt(6 * m.disk_count, 0);
  for (int d = 0; d < m.disk_count; ++d) {
    int kind = m.disk_kind[d];
    if (kind < 4) {
      for (int f = 0; f < 4; ++f) {
        if (f == kind) continue;
        int r = arcs.find(4 * d + f);
        if (!seen_arc[r]) {
          seen_arc[r] = 1;
          ++ecount[comp_of_disk(d)];
        }
        for (int x = 0; x < 4; ++x) {
          if (x == kind || x == f) continue;
          int pr = pts.find(6 * d + edge_index(kind, x));
          if (!seen_pt[pr]) {
            seen_pt[pr] = 1;
            ++vcount[comp_of_disk(d)];
          }
        }
      }
    } else {
      int slot = kind - 3;
      // The quad separates {0,slot} from the remaining pair.
      int x0 = 0, x1 = slot;
      int y0 = -1, y1 = -1;
      for (int w = 1; w < 4; ++w)
        if (w != slot) (y0 < 0 ? y0 : y1) = w;
      for (int f = 0; f < 4; ++f) {
        int r = arcs.find(4 * d + f);
        if (!seen_arc[r]) {
          seen_arc[r] = 1;
          ++ecount[comp_of_disk(d)];
        }
      }
      for (int a : {x0, x1})
        for (int b : {y0, y1}) {
          int pr = pts.find(6 * d + edge_index(a, b));
          if (!seen_pt[pr]) {
            seen_pt[pr] = 1;
            ++vcount[comp_of_disk(d)];
          }
        }
    }
  }
  for (size_t i = 0; i < out.size(); ++i)
    out[i].euler = vcount[i] - ecount[i] + fcount[i];
  return out;
}

bool is_connected(const Triangulation& t, const NormalVector& v) {
  return components(t, v).size() == 1;
}

NormalVector vertex_link(const Triangulation& t, int vertex_class,
                         const Skeleton* skel) {
  Skeleton local;
  if (!skel) {
    local = compute_skeleton(t);
    skel = &local;
  }
  NormalVector out = NormalVector::zero(t);
  for (int i = 0; i < t.tet_count; ++i)
    for (int c = 0; c < 4; ++c)
      if (skel->vclass(i, c) == vertex_class) out.tri(i, c) = 1;
  return out;
}

bool is_vertex_linking(const Triangulation& t, const NormalVector& v,
                       int vertex_class, const Skeleton* skel) {
  require_admissible(t, v);
  if (!is_connected(t, v)) throw Error("vector is not connected");
  return v == vertex_link(t, vertex_class, skel);
}

bool supported_in(const Triangulation& t, const NormalVector& v,
                  const std::vector<int>& tets) {
  std::vector<char> in(t.tet_count, 0);
  for (int i : tets) in[i] = 1;
  for (int i = 0; i < t.tet_count; ++i) {
    if (in[i]) continue;
    for (int k = 0; k < 7; ++k)
      if (v.c[7 * i + k] != 0) return false;
  }
  return true;
}

bool avoids_boundary(const Triangulation& t, const NormalVector& v) {
  for (int i = 0; i < t.tet_count; ++i)
    for (int f = 0; f < 4; ++f) {
      if (t.glue[i][f]) continue;
      for (int c = 0; c < 4; ++c)
        if (c != f && v.arcs(i, f, c) != 0) return false;
    }
  return true;
}

NormalVector parse_normal_vector(const Triangulation& t,
                                 const std::string& text) {
  std::istringstream in(text);
  NormalVector v = NormalVector::zero(t);
  for (size_t i = 0; i < v.c.size(); ++i)
    if (!(in >> v.c[i]))
      throw Error("normal vector file: expected " +
                  std::to_string(7 * t.tet_count) + " integers");
  int64_t extra;
  if (in >> extra) throw Error("normal vector file: trailing values");
  return v;
}

std::string serialize_normal_vector(const NormalVector& v) {
  std::ostringstream out;
  for (int i = 0; i < v.tets(); ++i) {
    for (int k = 0; k < 7; ++k) {
      if (k) out << ' ';
      out << v.c[7 * i + k];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace topo
