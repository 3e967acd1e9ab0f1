#include "topo/refine.hpp"

#include <algorithm>
#include <sstream>

#include "topo/util.hpp"

namespace topo {

ScalingFunction parse_scaling(const Triangulation& t, const std::string& text) {
  std::istringstream in(text);
  ScalingFunction f(t.tet_count);
  for (int i = 0; i < t.tet_count; ++i) {
    if (!(in >> f[i]))
      throw Error("scaling file: expected " + std::to_string(t.tet_count) +
                  " integers");
    if (f[i] < 0) throw Error("scaling file: negative entry");
  }
  int extra;
  if (in >> extra) throw Error("scaling file: trailing values");
  return f;
}

std::string serialize_scaling(const ScalingFunction& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << ' ';
    out << f[i];
  }
  out << "\n";
  return out.str();
}

int child_label(int slot, int v) {
  if (v < 0) return 3;  // cone vertex
  return v - (v > slot ? 1 : 0);
}

int parent_label(int slot, int l) {
  if (l == 3) return -1;
  return l + (l >= slot ? 1 : 0);
}

namespace {

// The gluing between children X < Y of one refined tet: faces, and the
// label map from child X to child Y.
struct InternalGluing {
  int face_x, face_y;
  Perm4 perm;
};

InternalGluing internal_child_gluing(int x, int y) {
  InternalGluing g;
  g.face_x = child_label(x, y);
  g.face_y = child_label(y, x);
  for (int v = 0; v < 4; ++v) {
    if (v == x || v == y) continue;
    g.perm.img[child_label(x, v)] = static_cast<uint8_t>(child_label(y, v));
  }
  g.perm.img[3] = 3;
  g.perm.img[g.face_x] = static_cast<uint8_t>(g.face_y);
  return g;
}

}  // namespace

std::pair<Triangulation, RefinementMap> refine_once(const Triangulation& t,
                                                    const std::vector<int>& tets) {
  require_valid(t);
  std::vector<char> sel(t.tet_count, 0);
  for (int i : tets) {
    if (i < 0 || i >= t.tet_count) throw Error("tet index out of range");
    sel[i] = 1;
  }

  RefinementRound round;
  round.source = t;
  round.refined = sel;
  round.base.resize(t.tet_count);
  int next = 0;
  for (int i = 0; i < t.tet_count; ++i) {
    round.base[i] = next;
    next += sel[i] ? 4 : 1;
  }
  Triangulation out = Triangulation::empty(next);

  for (int i = 0; i < t.tet_count; ++i) {
    if (sel[i]) {
      for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) {
          auto g = internal_child_gluing(x, y);
          out.set_gluing(round.base[i] + x, g.face_x, round.base[i] + y,
                         g.face_y, g.perm);
        }
    }
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[i][f];
      if (!g) continue;
      int u = g->tet, j = g->perm(f);
      const Perm4& p = g->perm;
      if (sel[i]) {
        // Parent face f survives as face 3 of child f.
        Perm4 q;
        if (sel[u]) {
          for (int l = 0; l < 3; ++l)
            q.img[l] = static_cast<uint8_t>(child_label(j, p(parent_label(f, l))));
          q.img[3] = 3;
          out.set_gluing(round.base[i] + f, 3, round.base[u] + j, 3, q);
        } else {
          for (int l = 0; l < 3; ++l)
            q.img[l] = static_cast<uint8_t>(p(parent_label(f, l)));
          q.img[3] = static_cast<uint8_t>(j);
          out.set_gluing(round.base[i] + f, 3, round.base[u], j, q);
        }
      } else if (!sel[u]) {
        out.set_gluing(round.base[i], f, round.base[u], j, p);
      }
      // sel[u] && !sel[i] is installed from u's side.
    }
  }
  round.target = out;
  RefinementMap m;
  m.rounds.push_back(std::move(round));
  return {out, std::move(m)};
}

std::pair<Triangulation, RefinementMap> refine_scaled(const Triangulation& t,
                                                      const ScalingFunction& f) {
  require_valid(t);
  if (static_cast<int>(f.size()) != t.tet_count)
    throw Error("scaling function size mismatch");
  for (int b : f)
    if (b < 0) throw Error("scaling function must be non-negative");

  Triangulation cur = t;
  std::vector<int> budget = f;
  RefinementMap m;
  for (;;) {
    std::vector<int> sel;
    for (int i = 0; i < cur.tet_count; ++i)
      if (budget[i] > 0) sel.push_back(i);
    if (sel.empty()) break;
    auto [next, step] = refine_once(cur, sel);
    const RefinementRound& r = step.rounds.front();
    std::vector<int> next_budget(next.tet_count, 0);
    for (int i = 0; i < cur.tet_count; ++i) {
      if (r.refined[i]) {
        for (int s = 0; s < 4; ++s) next_budget[r.base[i] + s] = budget[i] - 1;
      } else {
        next_budget[r.base[i]] = budget[i];
      }
    }
    m.rounds.push_back(r);
    cur = next;
    budget = std::move(next_budget);
  }
  if (m.rounds.empty()) {
    // Identity map: a single trivial round.
    RefinementRound r;
    r.source = t;
    r.target = t;
    r.refined.assign(t.tet_count, 0);
    r.base.resize(t.tet_count);
    for (int i = 0; i < t.tet_count; ++i) r.base[i] = i;
    m.rounds.push_back(std::move(r));
  }
  return {cur, std::move(m)};
}

std::vector<int> descendants(const RefinementMap& m, int source_tet) {
  std::vector<int> cur{source_tet};
  for (const auto& r : m.rounds) {
    std::vector<int> next;
    for (int i : cur) {
      if (r.refined[i])
        for (int s = 0; s < 4; ++s) next.push_back(r.base[i] + s);
      else
        next.push_back(r.base[i]);
    }
    cur = std::move(next);
  }
  return cur;
}

int forward_index(const RefinementMap& m, int source_tet) {
  int cur = source_tet;
  for (const auto& r : m.rounds) {
    if (r.refined[cur]) throw Error("tet was refined by the map");
    cur = r.base[cur];
  }
  return cur;
}

namespace {

NormalVector push_round(const RefinementRound& r, const NormalVector& v) {
  NormalVector out = NormalVector::zero(r.target);
  for (int i = 0; i < r.source.tet_count; ++i) {
    if (!r.refined[i]) {
      for (int k = 0; k < 7; ++k) out.c[7 * r.base[i] + k] = v.c[7 * i + k];
      continue;
    }
    for (int w = 0; w < 4; ++w) {
      int64_t n = v.tri(i, w);
      if (n == 0) continue;
      for (int x = 0; x < 4; ++x) {
        if (x == w) continue;
        out.tri(r.base[i] + x, child_label(x, w)) += n;
      }
    }
    for (int k = 1; k <= 3; ++k) {
      int64_t n = v.quad(i, k);
      if (n == 0) continue;
      // Canonical pattern, keyed to the pair {0,k}.
      out.tri(r.base[i] + 0, child_label(0, k)) += n;
      out.tri(r.base[i] + k, child_label(k, 0)) += n;
      for (int z = 1; z < 4; ++z) {
        if (z == k) continue;
        out.quad(r.base[i] + z,
                 quad_slot(child_label(z, 0), child_label(z, k))) += n;
      }
    }
  }
  return out;
}

// The sub-triangulation of the 4 children of one refined tet, with the
// parent's outer faces left as boundary.
Triangulation child_complex() {
  Triangulation sub = Triangulation::empty(4);
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y) {
      auto g = internal_child_gluing(x, y);
      sub.set_gluing(x, g.face_x, y, g.face_y, g.perm);
    }
  return sub;
}

struct Pattern {
  NormalVector v;   // on the 4-child complex
  int source_kind;  // 0..3 triangle, 4..6 quad slot kind-3, 7 e-sphere
};

const std::vector<Pattern>& pattern_table() {
  static const std::vector<Pattern> table = [] {
    Triangulation sub = child_complex();
    std::vector<Pattern> out;
    for (int w = 0; w < 4; ++w) {
      Pattern p1{NormalVector::zero(sub), w};
      for (int x = 0; x < 4; ++x)
        if (x != w) p1.v.tri(x, child_label(x, w)) = 1;
      out.push_back(std::move(p1));
      Pattern p2{NormalVector::zero(sub), w};
      p2.v.tri(w, 3) = 1;
      for (int x = 0; x < 4; ++x)
        if (x != w) p2.v.quad(x, quad_slot(child_label(x, w), 3)) = 1;
      out.push_back(std::move(p2));
    }
    for (int k = 1; k <= 3; ++k) {
      Pattern pa{NormalVector::zero(sub), 3 + k};
      pa.v.tri(0, child_label(0, k)) = 1;
      pa.v.tri(k, child_label(k, 0)) = 1;
      for (int z = 1; z < 4; ++z)
        if (z != k)
          pa.v.quad(z, quad_slot(child_label(z, 0), child_label(z, k))) = 1;
      out.push_back(std::move(pa));
      int y = -1, z = -1;
      for (int w = 1; w < 4; ++w)
        if (w != k) (y < 0 ? y : z) = w;
      Pattern pb{NormalVector::zero(sub), 3 + k};
      pb.v.tri(y, child_label(y, z)) = 1;
      pb.v.tri(z, child_label(z, y)) = 1;
      for (int x : {0, k})
        pb.v.quad(x, quad_slot(child_label(x, y), child_label(x, z))) = 1;
      out.push_back(std::move(pb));
    }
    Pattern es{NormalVector::zero(sub), 7};
    for (int x = 0; x < 4; ++x) es.v.tri(x, 3) = 1;
    out.push_back(std::move(es));
    return out;
  }();
  return table;
}

struct RoundPullback {
  bool ok = false;
  std::string diagnostic;
  NormalVector source;
  std::vector<int64_t> e_spheres;  // per source tet of the round
};

RoundPullback classify_round(const RefinementRound& r, const NormalVector& v) {
  static const Triangulation sub = child_complex();
  RoundPullback out;
  out.source = NormalVector::zero(r.source);
  out.e_spheres.assign(r.source.tet_count, 0);
  for (int i = 0; i < r.source.tet_count; ++i) {
    if (!r.refined[i]) {
      for (int k = 0; k < 7; ++k) out.source.c[7 * i + k] = v.c[7 * r.base[i] + k];
      continue;
    }
    NormalVector local = NormalVector::zero(sub);
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 7; ++k)
        local.c[7 * s + k] = v.c[7 * (r.base[i] + s) + k];
    if (!is_admissible(sub, local)) {
      out.diagnostic = "restriction to children of tet " + std::to_string(i) +
                       " is not admissible";
      return out;
    }
    for (const auto& piece : components(sub, local)) {
      const Pattern* match = nullptr;
      for (const auto& p : pattern_table())
        if (p.v == piece.vector) {
          match = &p;
          break;
        }
      if (!match) {
        out.diagnostic = "piece in tet " + std::to_string(i) +
                         " matches no refinement pattern: " +
                         serialize_normal_vector(piece.vector);
        return out;
      }
      if (match->source_kind == 7)
        ++out.e_spheres[i];
      else
        ++out.source.c[7 * i + match->source_kind];
    }
  }
  if (!is_admissible(r.source, out.source)) {
    out.diagnostic = "assembled source vector violates the matching equations";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

NormalVector push_forward(const RefinementMap& m, const NormalVector& v) {
  require_admissible(m.source(), v);
  NormalVector cur = v;
  for (const auto& r : m.rounds) cur = push_round(r, cur);
  return cur;
}

PullbackResult classify_pullback(const RefinementMap& m, const NormalVector& v) {
  require_admissible(m.target(), v);
  PullbackResult out;
  NormalVector cur = v;
  for (int ri = static_cast<int>(m.rounds.size()) - 1; ri >= 0; --ri) {
    RoundPullback rp = classify_round(m.rounds[ri], cur);
    if (!rp.ok) {
      out.diagnostic = rp.diagnostic;
      return out;
    }
    for (int i = 0; i < static_cast<int>(rp.e_spheres.size()); ++i)
      if (rp.e_spheres[i] > 0)
        out.e_spheres.push_back(ESphereCount{ri, i, rp.e_spheres[i]});
    cur = std::move(rp.source);
  }
  out.source = std::move(cur);
  out.ok = true;
  return out;
}

WeightGrowth weight_growth(int disk_kind, int n) {
  if (disk_kind < 0 || disk_kind > 6) throw Error("disk kind out of range");
  if (n < 0) throw Error("iteration count must be non-negative");
  Triangulation cur = Triangulation::empty(1);
  NormalVector v = NormalVector::zero(cur);
  v.c[disk_kind] = 1;
  WeightGrowth g;
  g.w.push_back(weight(cur, v).w1);
  g.d.push_back(1);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> all(cur.tet_count);
    for (int k = 0; k < cur.tet_count; ++k) all[k] = k;
    auto [next, step] = refine_once(cur, all);
    v = push_round(step.rounds.front(), v);
    cur = next;
    int64_t disks = 0;
    for (int64_t x : v.c) disks += x;
    g.w.push_back(weight(cur, v).w1);
    g.d.push_back(disks);
    if (g.d[i] < 3 * g.d[i - 1])
      throw Error("disk count recurrence violated at step " + std::to_string(i));
    if (g.w[i] < g.w[i - 1] + g.d[i - 1])
      throw Error("weight recurrence violated at step " + std::to_string(i));
    if (g.w[i] <= i)
      throw Error("weight bound violated at step " + std::to_string(i));
  }
  return g;
}

}  // namespace topo
