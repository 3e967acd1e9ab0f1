#include "topo/enumerate.hpp"

#include <algorithm>
#include <sstream>

#include "topo/util.hpp"

namespace topo {

namespace {

// Tet edges crossed by each coordinate: triangles cross the three edges at
// their vertex, quads the four edges joining their separated pairs.
struct CoordEdges {
  int n;
  int e[4];
};

const CoordEdges kCoordEdges[7] = {
    {3, {edge_index(0, 1), edge_index(0, 2), edge_index(0, 3), 0}},
    {3, {edge_index(0, 1), edge_index(1, 2), edge_index(1, 3), 0}},
    {3, {edge_index(0, 2), edge_index(1, 2), edge_index(2, 3), 0}},
    {3, {edge_index(0, 3), edge_index(1, 3), edge_index(2, 3), 0}},
    // q1 {0,1}|{2,3}
    {4, {edge_index(0, 2), edge_index(0, 3), edge_index(1, 2), edge_index(1, 3)}},
    // q2 {0,2}|{1,3}
    {4, {edge_index(0, 1), edge_index(0, 3), edge_index(1, 2), edge_index(2, 3)}},
    // q3 {0,3}|{1,2}
    {4, {edge_index(0, 1), edge_index(0, 2), edge_index(1, 3), edge_index(2, 3)}},
};

class Searcher {
 public:
  Searcher(const EnumerationQuery& q)
      : q_(q), tri_(q.tri), skel_(compute_skeleton(q.tri)) {
    int T = tri_.tet_count;
    partial_.assign(6 * T, 0);
    lb_.assign(skel_.edge_count, 0);
    forced_zero_.assign(7 * T, 0);
    cur_ = NormalVector::zero(tri_);
    if (q.support) {
      std::vector<char> in(T, 0);
      for (int i : *q.support) in[i] = 1;
      for (int t = 0; t < T; ++t)
        if (!in[t])
          for (int k = 0; k < 7; ++k) forced_zero_[7 * t + k] = 1;
    }
    if (q.closed_only) {
      for (int t = 0; t < T; ++t)
        for (int f = 0; f < 4; ++f) {
          if (tri_.glue[t][f]) continue;
          for (int v = 0; v < 4; ++v) {
            if (v == f) continue;
            forced_zero_[7 * t + v] = 1;
            forced_zero_[7 * t + 3 + quad_slot(v, f)] = 1;
          }
        }
    }
  }

  std::vector<NormalVector> run() {
    if (q_.max_w1 < 1) throw Error("max_w1 must be at least 1");
    if (tri_.tet_count > 0) assign_tet(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  struct Undo {
    int cls;
    int64_t old_lb;
  };

  // Applies coordinate value x; returns false when the weight bound is
  // already exceeded. The caller must unapply either way.
  bool apply(int t, int k, int64_t x, std::vector<Undo>& undo) {
    cur_.c[7 * t + k] = x;
    const CoordEdges& ce = kCoordEdges[k];
    for (int i = 0; i < ce.n; ++i) {
      int g = 6 * t + ce.e[i];
      partial_[g] += x;
      int cls = skel_.edge_class[g];
      if (partial_[g] > lb_[cls]) {
        undo.push_back({cls, lb_[cls]});
        lb_sum_ += partial_[g] - lb_[cls];
        lb_[cls] = partial_[g];
      }
    }
    return lb_sum_ <= q_.max_w1;
  }

  void unapply(int t, int k, int64_t x, const std::vector<Undo>& undo) {
    cur_.c[7 * t + k] = 0;
    const CoordEdges& ce = kCoordEdges[k];
    for (int i = 0; i < ce.n; ++i) partial_[6 * t + ce.e[i]] -= x;
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      lb_sum_ -= lb_[it->cls] - it->old_lb;
      lb_[it->cls] = it->old_lb;
    }
  }

  struct FixedFace {
    int face;
    int64_t need[4];  // required arc count per corner (corner == face unused)
  };

  void assign_tet(int t) {
    if (t == tri_.tet_count) {
      if (!cur_.is_zero()) {
        if (results_.size() >= q_.result_limit)
          throw Error("enumeration result limit exceeded after " +
                      std::to_string(results_.size()) + " vectors");
        results_.push_back(cur_);
      }
      return;
    }
    std::vector<FixedFace> fixed;
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri_.glue[t][f];
      if (!g || g->tet >= t) continue;
      FixedFace ff;
      ff.face = f;
      for (int v = 0; v < 4; ++v)
        if (v != f) ff.need[v] = cur_.arcs(g->tet, g->perm(f), g->perm(v));
      fixed.push_back(ff);
    }
    tri_loop(t, 0, fixed);
  }

  void tri_loop(int t, int v, const std::vector<FixedFace>& fixed) {
    if (v == 4) {
      assign_quads(t, fixed);
      return;
    }
    int64_t bound = forced_zero_[7 * t + v] ? 0 : q_.max_w1;
    for (const auto& ff : fixed)
      if (ff.face != v) bound = std::min(bound, ff.need[v]);
    for (int64_t x = 0; x <= bound; ++x) {
      std::vector<Undo> undo;
      bool ok = apply(t, v, x, undo);
      if (ok) tri_loop(t, v + 1, fixed);
      unapply(t, v, x, undo);
      if (!ok) break;  // larger values only increase the weight
    }
  }

  void assign_quads(int t, const std::vector<FixedFace>& fixed) {
    if (!fixed.empty()) {
      // One fixed face determines all three quad coordinates.
      const FixedFace& f0 = fixed.front();
      int64_t q[4];
      int positive = 0;
      for (int v = 0; v < 4; ++v) {
        if (v == f0.face) continue;
        int slot = quad_slot(v, f0.face);
        q[slot] = f0.need[v] - cur_.tri(t, v);
        if (q[slot] < 0) return;
        if (q[slot] > 0) {
          if (forced_zero_[7 * t + 3 + slot]) return;
          ++positive;
        }
      }
      if (positive > 1) return;
      quad_sequence(t, q);
      return;
    }
    quad_loop(t, 1, false);
  }

  // Applies the three determined quad values, then finishes the tet.
  void quad_sequence(int t, const int64_t* q) {
    std::vector<Undo> undo[3];
    int applied = 0;
    bool ok = true;
    for (int slot = 1; slot <= 3 && ok; ++slot) {
      ok = apply(t, 3 + slot, q[slot], undo[slot - 1]);
      ++applied;
    }
    if (ok) finish_tet(t);
    for (int slot = applied; slot >= 1; --slot)
      unapply(t, 3 + slot, q[slot], undo[slot - 1]);
  }

  void quad_loop(int t, int slot, bool have_quad) {
    if (slot == 4) {
      finish_tet(t);
      return;
    }
    int64_t bound = (forced_zero_[7 * t + 3 + slot] || have_quad) ? 0 : q_.max_w1;
    for (int64_t x = 0; x <= bound; ++x) {
      std::vector<Undo> undo;
      bool ok = apply(t, 3 + slot, x, undo);
      if (ok) quad_loop(t, slot + 1, have_quad || x > 0);
      unapply(t, 3 + slot, x, undo);
      if (!ok) break;
    }
  }

  void finish_tet(int t) {
    // All matching equations whose both tets are now assigned.
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri_.glue[t][f];
      if (!g || g->tet > t) continue;
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        if (cur_.arcs(t, f, v) != cur_.arcs(g->tet, g->perm(f), g->perm(v)))
          return;
      }
    }
    assign_tet(t + 1);
  }

  const EnumerationQuery& q_;
  const Triangulation& tri_;
  Skeleton skel_;
  std::vector<int64_t> partial_;
  std::vector<int64_t> lb_;
  int64_t lb_sum_ = 0;
  std::vector<char> forced_zero_;
  NormalVector cur_;
  std::vector<NormalVector> results_;
};

}  // namespace

std::vector<NormalVector> enumerate_admissible(const EnumerationQuery& q) {
  require_valid(q.tri);
  return Searcher(q).run();
}

std::vector<SurfaceComponent> enumerate_connected(const EnumerationQuery& q) {
  std::vector<SurfaceComponent> out;
  for (const auto& v : enumerate_admissible(q)) {
    auto comps = components(q.tri, v);
    if (comps.size() == 1) out.push_back(std::move(comps.front()));
  }
  return out;
}

std::string serialize_enumeration(const std::vector<NormalVector>& vs) {
  std::ostringstream out;
  out << "count " << vs.size() << "\n";
  for (const auto& v : vs) {
    out << "\n" << serialize_normal_vector(v);
  }
  return out.str();
}

}  // namespace topo
