#include "topo/surface.hpp"

#include <algorithm>
#include <sstream>

#include "topo/util.hpp"

namespace topo {

void SurfaceTriangulation::set_gluing(int t, int k, int u, int l, bool aligned) {
  if (t == u && k == l) throw Error("surface edge glued to itself");
  glue[t][k] = SurfaceGluing{u, l, aligned};
  glue[u][l] = SurfaceGluing{t, k, aligned};
}

std::vector<std::string> validate_surface(const SurfaceTriangulation& s) {
  std::vector<std::string> report;
  for (int t = 0; t < s.triangle_count; ++t)
    for (int k = 0; k < 3; ++k) {
      const auto& g = s.glue[t][k];
      if (!g) continue;
      std::string where =
          "triangle " + std::to_string(t) + " edge " + std::to_string(k);
      if (g->tri < 0 || g->tri >= s.triangle_count || g->slot < 0 || g->slot > 2) {
        report.push_back(where + ": target out of range");
        continue;
      }
      if (g->tri == t && g->slot == k) {
        report.push_back(where + ": edge glued to itself");
        continue;
      }
      const auto& back = s.glue[g->tri][g->slot];
      if (!back || back->tri != t || back->slot != k ||
          back->aligned != g->aligned) {
        report.push_back(where + ": non-involutive gluing");
        continue;
      }
      bool consistent = g->aligned
                            ? s.edge_dir[t][k] == s.edge_dir[g->tri][g->slot]
                            : s.edge_dir[t][k] != s.edge_dir[g->tri][g->slot];
      if (!consistent)
        report.push_back(where + ": edge direction inconsistent across gluing");
    }
  return report;
}

void require_valid(const SurfaceTriangulation& s) {
  auto report = validate_surface(s);
  if (!report.empty()) throw Error("invalid surface: " + report.front());
}

std::vector<std::vector<std::pair<int, int>>> surface_edge_classes(
    const SurfaceTriangulation& s) {
  std::vector<std::vector<std::pair<int, int>>> classes;
  for (int t = 0; t < s.triangle_count; ++t)
    for (int k = 0; k < 3; ++k) {
      const auto& g = s.glue[t][k];
      if (!g) {
        classes.push_back({{t, k}});
        continue;
      }
      if (std::make_pair(g->tri, g->slot) < std::make_pair(t, k)) continue;
      classes.push_back({{t, k}, {g->tri, g->slot}});
    }
  return classes;
}

std::vector<int> surface_vertex_classes(const SurfaceTriangulation& s,
                                        int* count) {
  UnionFind uf(3 * s.triangle_count);
  for (int t = 0; t < s.triangle_count; ++t)
    for (int k = 0; k < 3; ++k) {
      const auto& g = s.glue[t][k];
      if (!g) continue;
      auto [a1, b1] = SurfaceTriangulation::slot_ends(k);
      auto [a2, b2] = SurfaceTriangulation::slot_ends(g->slot);
      if (!g->aligned) std::swap(a2, b2);
      uf.unite(3 * t + a1, 3 * g->tri + a2);
      uf.unite(3 * t + b1, 3 * g->tri + b2);
    }
  return uf.classes(count);
}

void flip_edge_class(SurfaceTriangulation& s, int tri, int slot) {
  s.edge_dir[tri][slot] = !s.edge_dir[tri][slot];
  const auto& g = s.glue[tri][slot];
  if (g) s.edge_dir[g->tri][g->slot] = !s.edge_dir[g->tri][g->slot];
}

std::array<std::pair<int, int>, 3> directed_edges(const SurfaceTriangulation& s,
                                                  int t) {
  std::array<std::pair<int, int>, 3> out;
  for (int k = 0; k < 3; ++k) {
    auto [a, b] = SurfaceTriangulation::slot_ends(k);
    out[k] = s.edge_dir[t][k] ? std::make_pair(a, b) : std::make_pair(b, a);
  }
  return out;
}

bool is_cyclic_triangle(const SurfaceTriangulation& s, int t) {
  int tails = 0;
  for (const auto& [tail, head] : directed_edges(s, t)) tails |= 1 << tail;
  return tails == 0x7;  // every vertex is the tail of exactly one edge
}

int count_cyclic(const SurfaceTriangulation& s) {
  int n = 0;
  for (int t = 0; t < s.triangle_count; ++t)
    if (is_cyclic_triangle(s, t)) ++n;
  return n;
}

SurfaceTriangulation orient_acyclic(const SurfaceTriangulation& s,
                                    int* iterations) {
  require_valid(s);
  SurfaceTriangulation cur = s;
  int iters = 0;
  for (;;) {
    int t = -1;
    for (int i = 0; i < cur.triangle_count && t < 0; ++i)
      if (is_cyclic_triangle(cur, i)) t = i;
    if (t < 0) break;
    ++iters;

    // Cyclic vertex order u0 -> u1 -> u2 -> u0.
    int succ[3];
    for (const auto& [tail, head] : directed_edges(cur, t)) succ[tail] = head;
    int u[3] = {0, succ[0], succ[succ[0]]};

    // Replace t by [u0,u1,d] and append [u1,u2,d], [u2,u0,d]; the interior
    // point d becomes local vertex 2 of each, with new edges directed d->ui.
    int idx[3] = {t, cur.triangle_count, cur.triangle_count + 1};
    struct OldEdge {
      std::optional<SurfaceGluing> g;
      bool dir;
      bool flip;  // ascending direction reversed by the relabeling
    };
    OldEdge outer[3];
    for (int i = 0; i < 3; ++i) {
      int slot = 3 - u[i] - u[(i + 1) % 3];
      outer[i].g = cur.glue[t][slot];
      outer[i].dir = cur.edge_dir[t][slot];
      outer[i].flip = u[i] > u[(i + 1) % 3];
    }
    auto old_slot_of = [&](int slot) {
      for (int i = 0; i < 3; ++i)
        if (3 - u[i] - u[(i + 1) % 3] == slot) return i;
      throw Error("unreachable");
    };

    cur.triangle_count += 2;
    cur.glue.resize(cur.triangle_count);
    cur.edge_dir.resize(cur.triangle_count);
    for (int i = 0; i < 3; ++i) {
      cur.glue[idx[i]] = {};
      cur.edge_dir[idx[i]] = {false, false, true};
    }
    for (int i = 0; i < 3; ++i)
      cur.set_gluing(idx[i], 0, idx[(i + 1) % 3], 1, true);
    for (int i = 0; i < 3; ++i) {
      if (!outer[i].g) continue;
      const SurfaceGluing& g = *outer[i].g;
      bool aligned = g.aligned != outer[i].flip;
      if (g.tri == t) {
        // Two outer edges of the subdivided triangle were glued together.
        int j = old_slot_of(g.slot);
        if (j < i) continue;  // installed from the other side
        aligned = aligned != outer[j].flip;
        cur.set_gluing(idx[i], 2, idx[j], 2, aligned);
      } else {
        cur.set_gluing(idx[i], 2, g.tri, g.slot, aligned);
      }
      // The class direction is the cycle direction u_i -> u_{i+1}, which is
      // ascending in the new labels; dir stays true.
    }
  }
  if (iterations) *iterations = iters;
  return cur;
}

SurfaceTriangulation parse_surface(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw Error("empty surface file");
  std::istringstream h(header);
  std::string word;
  int n = -1;
  if (!(h >> word >> n) || word != "triangles" || n < 0)
    throw Error("line " + std::to_string(lineno) + ": expected 'triangles N'");
  SurfaceTriangulation s = SurfaceTriangulation::empty(n);
  for (int t = 0; t < n; ++t) {
    std::string row;
    if (!next_line(row))
      throw Error("line " + std::to_string(lineno) + ": missing row for triangle " +
                  std::to_string(t));
    std::istringstream r(row);
    for (int k = 0; k < 3; ++k) {
      std::string entry;
      if (!(r >> entry))
        throw Error("line " + std::to_string(lineno) + ": expected 3 edge entries");
      if (entry == "-") continue;
      auto dot = entry.find('.');
      auto colon = entry.find(':');
      if (dot == std::string::npos || colon == std::string::npos || colon < dot ||
          colon + 2 != entry.size() ||
          (entry[colon + 1] != '+' && entry[colon + 1] != '-'))
        throw Error("line " + std::to_string(lineno) + ": malformed entry '" +
                    entry + "'");
      int j, l;
      try {
        j = std::stoi(entry.substr(0, dot));
        l = std::stoi(entry.substr(dot + 1, colon - dot - 1));
      } catch (const std::exception&) {
        throw Error("line " + std::to_string(lineno) + ": malformed entry '" +
                    entry + "'");
      }
      if (j < 0 || j >= n || l < 0 || l > 2)
        throw Error("line " + std::to_string(lineno) + ": index out of range in '" +
                    entry + "'");
      s.glue[t][k] = SurfaceGluing{j, l, entry[colon + 1] == '+'};
    }
  }
  // Implied directions: ascending at the first incidence of each class.
  for (int t = 0; t < n; ++t)
    for (int k = 0; k < 3; ++k) {
      const auto& g = s.glue[t][k];
      if (!g) {
        s.edge_dir[t][k] = true;
      } else if (std::make_pair(t, k) < std::make_pair(g->tri, g->slot)) {
        s.edge_dir[t][k] = true;
        s.edge_dir[g->tri][g->slot] = g->aligned;
      }
    }
  auto report = validate_surface(s);
  if (!report.empty()) throw Error("invalid surface: " + report.front());
  return s;
}

std::string serialize_surface(const SurfaceTriangulation& s) {
  require_valid(s);
  // Relabel each triangle so that every edge class is directed along the
  // ascending labels of its first incidence, matching the parse convention.
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<int> perm_of(s.triangle_count, -1);
  std::vector<std::array<bool, 3>> flip(s.triangle_count);  // per old slot

  auto apply = [&](int t, const int* p, std::array<bool, 3>& fl,
                   std::array<bool, 3>& new_dir, std::array<int, 3>& new_slot) {
    for (int k = 0; k < 3; ++k) {
      auto [a, b] = SurfaceTriangulation::slot_ends(k);
      new_slot[k] = p[k];
      fl[k] = p[a] > p[b];
      new_dir[p[k]] = s.edge_dir[t][k] != fl[k];
    }
  };

  std::vector<std::array<int, 3>> slot_map(s.triangle_count);
  for (int t = 0; t < s.triangle_count; ++t) {
    bool done = false;
    for (int pi = 0; pi < 6 && !done; ++pi) {
      std::array<bool, 3> fl{}, nd{};
      std::array<int, 3> ns{};
      apply(t, kPerms[pi], fl, nd, ns);
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        const auto& g = s.glue[t][k];
        bool representative;
        if (!g) {
          representative = true;
        } else if (g->tri != t) {
          representative = t < g->tri;
        } else {
          // Both incidences in this triangle: the smaller new slot leads.
          representative = ns[k] < ns[g->slot];
        }
        if (representative && !nd[ns[k]]) ok = false;
      }
      if (ok) {
        perm_of[t] = pi;
        flip[t] = fl;
        slot_map[t] = ns;
        done = true;
      }
    }
    if (!done) throw Error("orientation not representable in surface file");
  }

  std::ostringstream out;
  out << "triangles " << s.triangle_count << "\n";
  for (int t = 0; t < s.triangle_count; ++t) {
    std::array<std::string, 3> entries;
    for (int k = 0; k < 3; ++k) {
      const auto& g = s.glue[t][k];
      if (!g) {
        entries[slot_map[t][k]] = "-";
        continue;
      }
      bool aligned = g->aligned != flip[t][k];
      aligned = aligned != flip[g->tri][g->slot];
      entries[slot_map[t][k]] = std::to_string(g->tri) + "." +
                                std::to_string(slot_map[g->tri][g->slot]) +
                                (aligned ? ":+" : ":-");
    }
    out << entries[0] << ' ' << entries[1] << ' ' << entries[2] << "\n";
  }
  return out.str();
}

}  // namespace topo
