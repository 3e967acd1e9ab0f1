#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topo/normal.hpp"
#include "topo/prism.hpp"
#include "topo/util.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace topo;

TEST_CASE("quad slots separate the right pairs") {
  CHECK(quad_slot(0, 1) == 1);
  CHECK(quad_slot(0, 2) == 2);
  CHECK(quad_slot(0, 3) == 3);
  CHECK(quad_slot(2, 3) == 1);
  CHECK(quad_slot(1, 3) == 2);
  CHECK(quad_slot(1, 2) == 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) CHECK(quad_slot(a, b) == quad_slot(b, a));
}

TEST_CASE("matching equation counts") {
  CHECK(matching_equations(fixtures::single_tet()).empty());
  // 4 glued face classes, 3 arc types each.
  CHECK(matching_equations(fixtures::doubled_tet()).size() == 12);
  CHECK(matching_equations(fixtures::two_chain()).size() == 3);
  CHECK(matching_equations(fixtures::three_chain()).size() == 6);

  // Prism over one lone triangle: two internal faces.
  SurfaceTriangulation one = SurfaceTriangulation::empty(1);
  PrismComplex p = build_prism(one);
  CHECK(p.tri.tet_count == 3);
  CHECK(matching_equations(p.tri).size() == 6);
}

TEST_CASE("admissibility on the doubled tet") {
  Triangulation t = fixtures::doubled_tet();
  NormalVector v = NormalVector::zero(t);
  CHECK(is_admissible(t, v));  // zero vector satisfies everything

  v.tri(0, 2) = 1;
  CHECK(!is_admissible(t, v));  // unmatched across the gluings
  v.tri(1, 2) = 1;
  CHECK(is_admissible(t, v));

  // Two quad types in one tet are inadmissible even when matched.
  NormalVector q = NormalVector::zero(t);
  q.quad(0, 1) = 1;
  q.quad(1, 1) = 1;
  CHECK(is_admissible(t, q));
  q.quad(0, 2) = 1;
  q.quad(1, 2) = 1;
  CHECK(!is_admissible(t, q));

  NormalVector neg = NormalVector::zero(t);
  neg.tri(0, 0) = -1;
  CHECK(!is_admissible(t, neg));
  CHECK_THROWS_AS(require_admissible(t, neg), Error);
}

TEST_CASE("vertex links of the doubled tet") {
  Triangulation t = fixtures::doubled_tet();
  Skeleton skel = compute_skeleton(t);
  REQUIRE(skel.vertex_count == 4);
  for (int c = 0; c < 4; ++c) {
    NormalVector link = vertex_link(t, c, &skel);
    CHECK(is_admissible(t, link));
    CHECK(is_vertex_linking(t, link, c, &skel));
    PLArea a = weight(t, link, &skel);
    CHECK(a.w1 == 3);
    CHECK(a.w2 == 3);
    auto comps = components(t, link);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].euler == 2);
    CHECK(comps[0].vector == link);
    CHECK(is_connected(t, link));
  }
  NormalVector q = NormalVector::zero(t);
  q.quad(0, 1) = 1;
  q.quad(1, 1) = 1;
  CHECK(!is_vertex_linking(t, q, 0, &skel));
}

TEST_CASE("a matched quad pair forms one sphere of weight (4,4)") {
  Triangulation t = fixtures::doubled_tet();
  for (int k = 1; k <= 3; ++k) {
    NormalVector v = NormalVector::zero(t);
    v.quad(0, k) = 1;
    v.quad(1, k) = 1;
    REQUIRE(is_admissible(t, v));
    PLArea a = weight(t, v);
    CHECK(a.w1 == 4);
    CHECK(a.w2 == 4);
    auto comps = components(t, v);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].euler == 2);
  }
}

TEST_CASE("weight agrees with the naive per-class computation") {
  Triangulation t = fixtures::three_chain();
  oracle::NaiveQuery q;
  q.max_w1 = 5;
  for (const NormalVector& v : oracle::naive_enumerate(t, q)) {
    auto w1 = oracle::naive_w1(t, v);
    REQUIRE(w1.has_value());
    CHECK(weight(t, v).w1 == *w1);
  }
}

TEST_CASE("multiples of a link are disconnected") {
  Triangulation t = fixtures::doubled_tet();
  NormalVector link = vertex_link(t, 0);
  NormalVector twice = link + link;
  REQUIRE(is_admissible(t, twice));
  auto comps = components(t, twice);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vector == link);
  CHECK(comps[1].vector == link);
  CHECK(!is_connected(t, twice));
}

TEST_CASE("support and boundary predicates") {
  Triangulation t = fixtures::two_chain();
  NormalVector v = NormalVector::zero(t);
  v.tri(0, 2) = 1;  // linked corner away from the glued face 0? no: face 0
  // Corner 2 lies on glued face 0 of tet 0, so it must match into tet 1.
  CHECK(!is_admissible(t, v));
  v.tri(1, 2) = 1;  // image of corner 2 under the swap(0,1) gluing is 2
  CHECK(is_admissible(t, v));
  CHECK(supported_in(t, v, {0, 1}));
  CHECK(!supported_in(t, v, {0}));
  CHECK(!avoids_boundary(t, v));

  Triangulation closed = fixtures::doubled_tet();
  CHECK(avoids_boundary(closed, vertex_link(closed, 0)));
}

TEST_CASE("normal vector file round-trip") {
  Triangulation t = fixtures::doubled_tet();
  NormalVector v = vertex_link(t, 1);
  std::string text = serialize_normal_vector(v);
  CHECK(parse_normal_vector(t, text) == v);
  CHECK_THROWS_AS(parse_normal_vector(t, "1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_normal_vector(fixtures::single_tet(), text), Error);
}
