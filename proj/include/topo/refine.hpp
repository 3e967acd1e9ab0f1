#pragma once

#include <string>
#include <vector>

#include "topo/normal.hpp"
#include "topo/triangulation.hpp"

namespace topo {

// Per-tetrahedron iteration count for the cone refinement.
using ScalingFunction = std::vector<int>;

ScalingFunction parse_scaling(const Triangulation& t, const std::string& text);
std::string serialize_scaling(const ScalingFunction& f);

// One application of the cone subdivision to a set of tetrahedra.
// A refined source tet occupies 4 consecutive target indices; child X omits
// parent vertex X and carries the cone vertex as its label 3, the remaining
// parent labels in ascending order as labels 0..2.
struct RefinementRound {
  Triangulation source;
  Triangulation target;
  std::vector<char> refined;  // per source tet
  std::vector<int> base;      // per source tet: its first target index

  int child(int source_tet, int slot) const {
    return base[source_tet] + (refined[source_tet] ? slot : 0);
  }
};

// Composition of rounds; round 0 starts at the original triangulation.
struct RefinementMap {
  std::vector<RefinementRound> rounds;

  const Triangulation& source() const { return rounds.front().source; }
  const Triangulation& target() const { return rounds.back().target; }
};

// Label of parent vertex `v` within child `slot` (v != slot), or of the cone
// vertex when v < 0.
int child_label(int slot, int v);
// Parent vertex at label `l` of child `slot`; returns -1 for the cone vertex.
int parent_label(int slot, int l);

std::pair<Triangulation, RefinementMap> refine_once(
    const Triangulation& t, const std::vector<int>& tets);

std::pair<Triangulation, RefinementMap> refine_scaled(const Triangulation& t,
                                                      const ScalingFunction& f);

// Descendant target tets of a source tet under the whole map.
std::vector<int> descendants(const RefinementMap& m, int source_tet);

// Final target index of a source tet that no round refined.
int forward_index(const RefinementMap& m, int source_tet);

NormalVector push_forward(const RefinementMap& m, const NormalVector& v);

// e-sphere components found at one refinement level.
struct ESphereCount {
  int round;       // which round's source the tet index refers to
  int source_tet;  // the refined tet whose cone vertex the spheres link
  int64_t count;
};

struct PullbackResult {
  bool ok = false;
  std::string diagnostic;  // set when a piece matches no pattern
  NormalVector source;
  std::vector<ESphereCount> e_spheres;

  int64_t total_e_spheres() const {
    int64_t n = 0;
    for (const auto& e : e_spheres) n += e.count;
    return n;
  }
};

// Decomposes an admissible target vector, per source tet and refinement
// level, into the 15 disk patterns (two per source disk type plus the
// cone-vertex sphere) and assembles the source coordinates.
PullbackResult classify_pullback(const RefinementMap& m, const NormalVector& v);

struct WeightGrowth {
  std::vector<int64_t> w;  // 1-weights after 0..n refinements
  std::vector<int64_t> d;  // disk counts after 0..n refinements
};

// Instantiates one disk of the given kind (0..3 triangle, 4..6 quad) in a
// single tetrahedron and refines n times, pushing the disk forward.
// Checks d_k >= 3 d_{k-1}, w_k >= w_{k-1} + d_{k-1} and w_k > k.
WeightGrowth weight_growth(int disk_kind, int n);

}  // namespace topo
