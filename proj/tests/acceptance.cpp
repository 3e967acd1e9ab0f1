// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria. Criterion 8 reruns 1-7 and compares the
// collected outputs byte for byte (timing is excluded throughout).

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "topo/enumerate.hpp"
#include "topo/normal.hpp"
#include "topo/prism.hpp"
#include "topo/refine.hpp"
#include "topo/surface.hpp"
#include "topo/triangulation.hpp"
#include "topo/util.hpp"
#include "topo/verify.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

namespace {

struct Failure {
  std::string message;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// 1. Refinement combinatorics.
std::string criterion1() {
  std::ostringstream out;
  auto [t1, m1] = topo::refine_scaled(fixtures::single_tet(), {1});
  topo::Skeleton s1 = topo::compute_skeleton(t1);
  expect(t1.tet_count == 4 && s1.vertex_count == 5 && s1.edge_count == 10 &&
             s1.face_count == 10,
         "one round: expected 4 tets, V=5, E=10, F=10");
  out << "phi: 4 tets, V=5 E=10 F=10\n";

  auto [t2, m2] = topo::refine_scaled(fixtures::single_tet(), {2});
  topo::Skeleton s2 = topo::compute_skeleton(t2);
  expect(t2.tet_count == 16 && s2.vertex_count == 9 && s2.edge_count == 26 &&
             s2.face_count == 34,
         "two rounds: expected 16 tets, V=9, E=26, F=34");
  out << "phi^2: 16 tets, V=9 E=26 F=34\n";

  int64_t expected = 1;
  for (int n = 0; n <= 5; ++n) {
    auto [t, m] = topo::refine_scaled(fixtures::single_tet(), {n});
    expect(t.tet_count == expected,
           "scaled refinement size mismatch at n=" + std::to_string(n));
    expected *= 4;
  }
  out << "tet counts 4^n for n=0..5\n";
  return out.str();
}

// 2. Disk weight growth.
std::string criterion2() {
  std::ostringstream out;
  const std::vector<int64_t> w_expect{3, 4, 7, 16, 43};
  const std::vector<int64_t> d_expect{1, 3, 9, 27, 81};
  for (int kind = 0; kind < 4; ++kind) {
    topo::WeightGrowth g = topo::weight_growth(kind, 4);
    expect(g.w == w_expect && g.d == d_expect,
           "triangle growth mismatch for kind " + std::to_string(kind));
    for (size_t n = 0; n < g.w.size(); ++n) {
      expect(g.w[n] > static_cast<int64_t>(n), "weight bound w_n > n violated");
      if (n > 0) {
        expect(g.d[n] >= 3 * g.d[n - 1], "disk recurrence violated");
        expect(g.w[n] >= g.w[n - 1] + g.d[n - 1], "weight recurrence violated");
      }
    }
  }
  out << "triangle disks: w = 3 4 7 16 43, d = 1 3 9 27 81\n";
  for (int kind = 4; kind < 7; ++kind) {
    topo::WeightGrowth g = topo::weight_growth(kind, 1);
    expect(g.w[1] == 6, "quad weight after one round must be 6");
  }
  out << "quad disks: w_1 = 6\n";
  return out.str();
}

// 3. Push-forward / pull-back bijection within cap 6.
std::string criterion3() {
  std::ostringstream out;
  struct Instance {
    std::string name;
    topo::Triangulation t;
    topo::ScalingFunction f;
  };
  std::vector<Instance> instances;
  instances.push_back({"single tet, f=(1)", fixtures::single_tet(), {1}});
  instances.push_back({"single tet, f=(2)", fixtures::single_tet(), {2}});
  instances.push_back({"doubled tet, f=(1,1)", fixtures::doubled_tet(), {1, 1}});
  for (const auto& inst : instances) {
    topo::VerificationReport r = topo::verify_theorem1(inst.t, inst.f, 6);
    expect(r.pass, inst.name + ": " +
                       (r.payload.empty() ? "failed" : r.payload.front()));
    out << inst.name << ": ";
    for (const auto& line : r.payload) out << line;
    out << "\n";
  }
  return out.str();
}

// 4. Enumerator vs naive oracle.
std::string criterion4() {
  std::ostringstream out;
  struct Instance {
    std::string name;
    topo::Triangulation t;
  };
  std::vector<Instance> instances;
  instances.push_back({"single tet", fixtures::single_tet()});
  instances.push_back({"doubled tet", fixtures::doubled_tet()});
  instances.push_back({"two-tet chain", fixtures::two_chain()});
  instances.push_back({"three-tet chain", fixtures::three_chain()});
  for (const auto& inst : instances) {
    topo::EnumerationQuery q;
    q.tri = inst.t;
    q.max_w1 = 6;
    auto fast = topo::enumerate_admissible(q);
    oracle::NaiveQuery nq;
    nq.max_w1 = 6;
    auto slow = oracle::naive_enumerate(inst.t, nq);
    expect(fast == slow, inst.name + ": enumerator disagrees with the oracle");
    out << inst.name << ": " << fast.size() << " vectors match the oracle\n";
  }

  topo::EnumerationQuery q;
  q.tri = fixtures::doubled_tet();
  q.closed_only = true;
  q.max_w1 = 3;
  auto spheres = topo::enumerate_connected(q);
  expect(spheres.size() == 4, "expected 4 closed vectors at cap 3");
  for (const auto& s : spheres)
    expect(s.euler == 2, "closed vector at cap 3 is not a sphere");
  q.max_w1 = 4;
  expect(topo::enumerate_admissible(q).size() == 7,
         "expected 7 closed vectors at cap 4");
  out << "doubled tet closed: 4 spheres at cap 3, 7 vectors at cap 4\n";
  return out.str();
}

// 5. Prism uniqueness. The canonical vector has weight exactly 10 (the
// bottom-to-top edge classes are 4 verticals and 6 diagonals; an Euler
// characteristic count shows no further classes can exist), so the caps are
// 10 and 9 rather than the nominal 14/13; 14 is checked as well.
std::string criterion5() {
  std::ostringstream out;
  topo::SurfaceTriangulation s = fixtures::tetra_sphere();
  topo::PrismComplex p = topo::build_prism(s);
  expect(p.tri.tet_count == 12, "prism must have 12 tets");
  topo::PLArea canon = topo::weight(p.tri, p.canonical);
  expect(canon.w1 == 10, "canonical weight must be exactly 10");

  for (int64_t cap : {10, 14}) {
    topo::VerificationReport r = topo::verify_prism(s, cap);
    expect(r.pass, "uniqueness failed at cap " + std::to_string(cap));
    topo::EnumerationQuery q;
    q.tri = p.tri;
    q.max_w1 = cap;
    q.closed_only = true;
    auto found = topo::enumerate_connected(q);
    expect(found.size() == 1 && found[0].vector == p.canonical,
           "expected exactly the canonical vector at cap " +
               std::to_string(cap));
  }
  out << "caps 10 and 14: only the canonical vector (w1 = 10)\n";

  topo::EnumerationQuery q;
  q.tri = p.tri;
  q.max_w1 = 9;
  q.closed_only = true;
  expect(topo::enumerate_connected(q).empty(),
         "no closed connected vector may exist below the canonical weight");
  out << "cap 9: no closed connected vectors\n";
  return out.str();
}

// 6. Acyclic orientation on a random corpus.
std::string criterion6() {
  std::ostringstream out;
  std::mt19937 rng(431);
  int cases = 0, total_subdivided = 0;
  for (int round = 0; round < 8; ++round) {
    for (auto base : {fixtures::tetra_sphere(), fixtures::octahedron_sphere(),
                      fixtures::torus_grid()}) {
      fixtures::random_orientation(base, rng);
      int n_cyclic = topo::count_cyclic(base);
      int iterations = 0;
      topo::SurfaceTriangulation r = topo::orient_acyclic(base, &iterations);
      expect(iterations == n_cyclic, "iteration count differs from N_tau");
      expect(topo::count_cyclic(r) == 0, "cyclic triangle left over");
      expect(r.triangle_count == base.triangle_count + 2 * n_cyclic,
             "triangle count must grow by 2 per subdivision");
      expect(topo::validate_surface(r).empty(), "result must validate");
      ++cases;
      total_subdivided += n_cyclic;
    }
  }
  expect(cases >= 20, "corpus too small");
  out << cases << " surfaces, " << total_subdivided
      << " cyclic triangles removed\n";
  return out.str();
}

// 7. Heavy exterior weight bound at scale 2.
std::string criterion7() {
  std::ostringstream out;
  topo::SurfaceTriangulation s = fixtures::tetra_sphere();
  topo::PrismComplex p = topo::build_prism(s);
  topo::HeavyExterior h = topo::build_heavy_exterior(p, 2);
  expect(h.tri.tet_count == 140, "heavy exterior must have 140 tets");
  topo::VerificationReport r = topo::verify_outside(p, 2, 2);
  expect(r.pass, "weight bound violated");
  out << "140 tets; ";
  for (const auto& line : r.payload) out << line;
  out << "\n";
  return out.str();
}

std::string run_all(int* failures) {
  std::ostringstream all;
  struct Criterion {
    int number;
    std::string name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "refinement combinatorics", criterion1},
      {2, "disk weight growth", criterion2},
      {3, "push/pull bijection", criterion3},
      {4, "enumerator oracle equivalence", criterion4},
      {5, "prism uniqueness", criterion5},
      {6, "acyclic orientation corpus", criterion6},
      {7, "heavy exterior weight bound", criterion7},
  };
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.message + "\n";
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected error: ") + e.what() + "\n";
    }
    if (!ok && failures) ++*failures;
    all << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " ("
        << c.name << ")\n"
        << detail;
  }
  return all.str();
}

}  // namespace

int main() {
  int failures = 0;
  std::string first = run_all(&failures);
  std::cout << first;

  // 8. Determinism: a second run of criteria 1-7 must produce identical text.
  int rerun_failures = 0;
  std::string second = run_all(&rerun_failures);
  bool deterministic = (second == first) && rerun_failures == failures;
  if (!deterministic) ++failures;
  std::cout << (deterministic ? "PASS" : "FAIL")
            << " criterion 8 (determinism)\n";
  if (deterministic) std::cout << "criteria 1-7 reproduced byte-identically\n";
  return failures;
}
