#pragma once

// Independent reference implementations used to cross-check the library.
// They deliberately share no algorithms with the production code: skeleton
// counts use BFS over an explicit identification graph instead of union-find,
// and enumeration is a plain bounded-box recursion with a single sound prune.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "topo/normal.hpp"
#include "topo/triangulation.hpp"

namespace oracle {

struct SkelCounts {
  int vertices = 0, edges = 0, faces = 0;
};

namespace detail {

inline int bfs_components(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
  }
  return comps;
}

}  // namespace detail

inline SkelCounts skeleton_counts(const topo::Triangulation& t) {
  int T = t.tet_count;
  std::vector<std::vector<int>> vadj(4 * T), eadj(6 * T), fadj(4 * T);
  for (int tet = 0; tet < T; ++tet)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[tet][f];
      if (!g) continue;
      int u = g->tet;
      fadj[4 * tet + f].push_back(4 * u + g->perm(f));
      fadj[4 * u + g->perm(f)].push_back(4 * tet + f);
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        vadj[4 * tet + v].push_back(4 * u + g->perm(v));
        vadj[4 * u + g->perm(v)].push_back(4 * tet + v);
      }
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (a == f || b == f) continue;
          int e1 = 6 * tet + topo::edge_index(a, b);
          int e2 = 6 * u + topo::edge_index(g->perm(a), g->perm(b));
          eadj[e1].push_back(e2);
          eadj[e2].push_back(e1);
        }
    }
  SkelCounts c;
  c.vertices = detail::bfs_components(4 * T, vadj);
  c.edges = detail::bfs_components(6 * T, eadj);
  c.faces = detail::bfs_components(4 * T, fadj);
  return c;
}

// 1-weight computed from scratch: edge classes by BFS, then the crossing
// count at every incidence of a class must agree; returns nullopt if not.
inline std::optional<int64_t> naive_w1(const topo::Triangulation& t,
                                       const topo::NormalVector& v) {
  int T = t.tet_count;
  std::vector<std::vector<int>> eadj(6 * T);
  for (int tet = 0; tet < T; ++tet)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[tet][f];
      if (!g) continue;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (a == f || b == f) continue;
          int e1 = 6 * tet + topo::edge_index(a, b);
          int e2 = 6 * g->tet + topo::edge_index(g->perm(a), g->perm(b));
          eadj[e1].push_back(e2);
          eadj[e2].push_back(e1);
        }
    }
  auto cross = [&](int id) {
    return v.crossings(id / 6, topo::kEdgeEnds[id % 6][0],
                       topo::kEdgeEnds[id % 6][1]);
  };
  std::vector<char> seen(6 * T, 0);
  int64_t total = 0;
  for (int s = 0; s < 6 * T; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    int64_t w = cross(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (cross(x) != w) return std::nullopt;
      for (int y : eadj[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
    total += w;
  }
  return total;
}

struct NaiveQuery {
  int64_t max_w1 = 1;
  bool closed_only = false;
  std::optional<std::vector<int>> support;
};

// Plain recursion over all 7T coordinates. Sound prune: the total crossing
// contribution 3*(triangles) + 4*(quads) of an admissible vector is at most
// max_w1 times the largest number of incidences of any edge class.
class NaiveEnumerator {
 public:
  NaiveEnumerator(const topo::Triangulation& t, const NaiveQuery& q)
      : t_(t), q_(q), cur_(topo::NormalVector::zero(t)) {
    topo::Skeleton skel = topo::compute_skeleton(t);
    std::vector<int> inc(skel.edge_count, 0);
    for (int id = 0; id < 6 * t.tet_count; ++id) ++inc[skel.edge_class[id]];
    int max_inc = 1;
    for (int n : inc) max_inc = std::max(max_inc, n);
    budget_ = q.max_w1 * max_inc;
  }

  std::vector<topo::NormalVector> run() {
    rec(0, 0);
    return out_;
  }

 private:
  void rec(int idx, int64_t spent) {
    if (idx == static_cast<int>(cur_.c.size())) {
      finish();
      return;
    }
    int64_t unit = idx % 7 < 4 ? 3 : 4;
    for (int64_t x = 0;; ++x) {
      if (spent + unit * x > budget_) break;
      cur_.c[idx] = x;
      rec(idx + 1, spent + unit * x);
    }
    cur_.c[idx] = 0;
  }

  void finish() {
    if (cur_.is_zero()) return;
    if (!topo::is_admissible(t_, cur_)) return;
    auto w1 = naive_w1(t_, cur_);
    if (!w1 || *w1 > q_.max_w1) return;
    if (q_.closed_only && !topo::avoids_boundary(t_, cur_)) return;
    if (q_.support && !topo::supported_in(t_, cur_, *q_.support)) return;
    out_.push_back(cur_);
  }

  const topo::Triangulation& t_;
  NaiveQuery q_;
  int64_t budget_ = 0;
  topo::NormalVector cur_;
  std::vector<topo::NormalVector> out_;
};

inline std::vector<topo::NormalVector> naive_enumerate(
    const topo::Triangulation& t, const NaiveQuery& q) {
  return NaiveEnumerator(t, q).run();
}

}  // namespace oracle
