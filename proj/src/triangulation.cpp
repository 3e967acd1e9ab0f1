#include "topo/triangulation.hpp"

#include <algorithm>
#include <sstream>

#include "topo/util.hpp"

namespace topo {

void Triangulation::set_gluing(int t, int f, int u, int j, const Perm4& p) {
  if (p(f) != j) throw Error("gluing permutation does not carry face to face");
  glue[t][f] = Gluing{u, p};
  glue[u][j] = Gluing{t, p.inverse()};
}

int Triangulation::boundary_face_count() const {
  int n = 0;
  for (int t = 0; t < tet_count; ++t)
    for (int f = 0; f < 4; ++f)
      if (!glue[t][f]) ++n;
  return n;
}

Triangulation parse_triangulation(const std::string& text) {
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
  if (!next_line(header)) throw Error("empty triangulation file");
  {
    std::istringstream h(header);
    std::string word;
    int n = -1;
    if (!(h >> word >> n) || word != "tets" || n < 0)
      throw Error("line " + std::to_string(lineno) + ": expected 'tets N'");
    Triangulation t = Triangulation::empty(n);
    for (int i = 0; i < n; ++i) {
      std::string row;
      if (!next_line(row))
        throw Error("line " + std::to_string(lineno) +
                    ": missing row for tetrahedron " + std::to_string(i));
      std::istringstream r(row);
      for (int f = 0; f < 4; ++f) {
        std::string entry;
        if (!(r >> entry))
          throw Error("line " + std::to_string(lineno) +
                      ": expected 4 face entries");
        if (entry == "-") continue;
        auto colon = entry.find(':');
        if (colon == std::string::npos)
          throw Error("line " + std::to_string(lineno) + ": malformed entry '" +
                      entry + "'");
        int target = -1;
        try {
          size_t used = 0;
          target = std::stoi(entry.substr(0, colon), &used);
          if (used != colon) throw std::invalid_argument(entry);
        } catch (const std::exception&) {
          throw Error("line " + std::to_string(lineno) +
                      ": malformed tetrahedron index in '" + entry + "'");
        }
        if (target < 0 || target >= n)
          throw Error("line " + std::to_string(lineno) +
                      ": tetrahedron index out of range in '" + entry + "'");
        Perm4 p;
        try {
          p = Perm4::parse(entry.substr(colon + 1));
        } catch (const Error& e) {
          throw Error("line " + std::to_string(lineno) + ": " + e.what());
        }
        t.glue[i][f] = Gluing{target, p};
      }
      std::string extra;
      if (r >> extra)
        throw Error("line " + std::to_string(lineno) +
                    ": trailing entry '" + extra + "'");
    }
    auto report = validate(t);
    if (!report.empty()) throw Error("invalid triangulation: " + report.front());
    return t;
  }
}

std::string serialize_triangulation(const Triangulation& t) {
  std::ostringstream out;
  out << "tets " << t.tet_count << "\n";
  for (int i = 0; i < t.tet_count; ++i) {
    for (int f = 0; f < 4; ++f) {
      if (f) out << ' ';
      if (t.glue[i][f])
        out << t.glue[i][f]->tet << ':' << t.glue[i][f]->perm.str();
      else
        out << '-';
    }
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> validate(const Triangulation& t) {
  std::vector<std::string> report;
  if (t.tet_count != static_cast<int>(t.glue.size())) {
    report.push_back("gluing table size does not match tet_count");
    return report;
  }
  for (int i = 0; i < t.tet_count; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[i][f];
      if (!g) continue;
      std::string where =
          "tet " + std::to_string(i) + " face " + std::to_string(f);
      if (g->tet < 0 || g->tet >= t.tet_count) {
        report.push_back(where + ": target tetrahedron out of range");
        continue;
      }
      if (!g->perm.is_valid()) {
        report.push_back(where + ": permutation is not a bijection");
        continue;
      }
      int j = g->perm(f);
      const auto& back = t.glue[g->tet][j];
      if (!back || back->tet != i || !(back->perm == g->perm.inverse()))
        report.push_back(where + ": non-involutive gluing");
      if (g->tet == i && j == f && g->perm.is_identity())
        report.push_back(where + ": face glued to itself pointwise");
    }
  }
  return report;
}

void require_valid(const Triangulation& t) {
  auto report = validate(t);
  if (!report.empty()) throw Error("invalid triangulation: " + report.front());
}

Skeleton compute_skeleton(const Triangulation& t) {
  UnionFind vuf(4 * t.tet_count), euf(6 * t.tet_count), fuf(4 * t.tet_count);
  for (int i = 0; i < t.tet_count; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.glue[i][f];
      if (!g) continue;
      const Perm4& p = g->perm;
      fuf.unite(4 * i + f, 4 * g->tet + p(f));
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        vuf.unite(4 * i + v, 4 * g->tet + p(v));
      }
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          if (a == f || b == f) continue;
          euf.unite(6 * i + edge_index(a, b),
                    6 * g->tet + edge_index(p(a), p(b)));
        }
    }
  }
  Skeleton s;
  s.tet_count = t.tet_count;
  s.vertex_class = vuf.classes(&s.vertex_count);
  s.edge_class = euf.classes(&s.edge_count);
  s.face_class = fuf.classes(&s.face_count);
  return s;
}

namespace {

// Walks around the edge {a,b} of the boundary face (tet,face), through the
// interior gluings, to the boundary face on the other side of the edge.
// Returns the partner incidence and the images of a and b there.
struct EdgeWalkEnd {
  int tet, face, a, b;
};

EdgeWalkEnd walk_around_edge(const Triangulation& t, int tet, int face, int a,
                             int b) {
  int cur_t = tet, cur_face = face, ca = a, cb = b;
  for (int guard = 0; guard <= 12 * t.tet_count; ++guard) {
    // The two faces of cur_t containing edge {ca,cb} are the faces opposite
    // the other two vertices; exit via the one we did not enter through.
    int exit = -1;
    for (int f = 0; f < 4; ++f)
      if (f != ca && f != cb && f != cur_face) exit = f;
    const auto& g = t.glue[cur_t][exit];
    if (!g) return EdgeWalkEnd{cur_t, exit, ca, cb};
    const Perm4& p = g->perm;
    int na = p(ca), nb = p(cb), nface = p(exit);
    cur_t = g->tet;
    cur_face = nface;
    ca = na;
    cb = nb;
  }
  throw Error("edge walk did not terminate (cyclic boundary edge)");
}

}  // namespace

std::vector<std::vector<int>> boundary_components(const Triangulation& t) {
  UnionFind uf(4 * t.tet_count);
  std::vector<int> bfaces;
  for (int i = 0; i < t.tet_count; ++i)
    for (int f = 0; f < 4; ++f)
      if (!t.glue[i][f]) bfaces.push_back(4 * i + f);
  for (int id : bfaces) {
    int tet = id / 4, face = id % 4;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (a == face || b == face) continue;
        auto end = walk_around_edge(t, tet, face, a, b);
        uf.unite(id, 4 * end.tet + end.face);
      }
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(4 * t.tet_count, -1);
  for (int id : bfaces) {
    int r = uf.find(id);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(id);
  }
  return comps;
}

Triangulation cone_boundary(const Triangulation& t, int component) {
  require_valid(t);
  auto comps = boundary_components(t);
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw Error("boundary component id out of range");
  const auto& faces = comps[component];

  // Closedness: every boundary edge of the component must join two distinct
  // (face, edge) incidences of the component.
  for (int id : faces) {
    int tet = id / 4, face = id % 4;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (a == face || b == face) continue;
        auto end = walk_around_edge(t, tet, face, a, b);
        if (end.tet == tet && end.face == face &&
            edge_index(end.a, end.b) == edge_index(a, b))
          throw Error("boundary component is not closed at an edge");
      }
  }

  Triangulation out = t;
  out.tet_count = t.tet_count + static_cast<int>(faces.size());
  out.glue.resize(out.tet_count);

  std::vector<int> cone_tet(4 * t.tet_count, -1);
  for (size_t k = 0; k < faces.size(); ++k) cone_tet[faces[k]] = t.tet_count + static_cast<int>(k);

  // label_of[face corner] within a cone tet: corners of the base face in
  // ascending order take labels 0,1,2; the apex is label 3.
  auto corner_label = [](int face, int v) {
    int l = 0;
    for (int w = 0; w < 4; ++w) {
      if (w == face) continue;
      if (w == v) return l;
      ++l;
    }
    throw Error("corner not on face");
  };

  for (int id : faces) {
    int tet = id / 4, face = id % 4, k = cone_tet[id];
    // Base: face 3 of the cone tet glues to the old boundary face.
    Perm4 p;  // cone labels -> labels of tet
    {
      int l = 0;
      for (int w = 0; w < 4; ++w) {
        if (w == face) continue;
        p.img[l++] = static_cast<uint8_t>(w);
      }
      p.img[3] = static_cast<uint8_t>(face);
    }
    out.glue[k][3] = Gluing{tet, p};
    out.glue[tet][face] = Gluing{k, p.inverse()};
    // Sides: one gluing per edge of the base face, to the cone tet over the
    // boundary face on the other side of that edge.
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (a == face || b == face) continue;
        auto end = walk_around_edge(t, tet, face, a, b);
        int k2 = cone_tet[4 * end.tet + end.face];
        if (k2 < 0) throw Error("boundary edge leaves the coned component");
        int c = 6 - a - b - face;        // third corner of the base face
        int c2 = 6 - end.a - end.b - end.face;
        Perm4 q;  // labels of cone tet k -> labels of cone tet k2
        q.img[corner_label(face, a)] = static_cast<uint8_t>(corner_label(end.face, end.a));
        q.img[corner_label(face, b)] = static_cast<uint8_t>(corner_label(end.face, end.b));
        q.img[corner_label(face, c)] = static_cast<uint8_t>(corner_label(end.face, c2));
        q.img[3] = 3;
        out.glue[k][corner_label(face, c)] = Gluing{k2, q};
      }
  }
  require_valid(out);
  return out;
}

Triangulation cone_all_boundary(const Triangulation& t) {
  Triangulation cur = t;
  while (!boundary_components(cur).empty()) cur = cone_boundary(cur, 0);
  return cur;
}

}  // namespace topo
