#include <doctest.h>

#include "assoc/associahedron.hpp"
#include "assoc/errors.hpp"
#include "assoc/hrep.hpp"
#include "assoc/sampling.hpp"
#include "assoc/trees.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::v;

namespace {
KPoint K(std::string_view s) { return KPoint(v(s)); }
}  // namespace

TEST_CASE("small associahedra") {
  CHECK(contains(k_hrep(1), v("(0)")));
  CHECK(k_vertices(2) == std::set<KPoint>{K("(0, 1)")});
  CHECK(k_vertices(4) == std::set<KPoint>{K("(0, 0, 2, 1)"), K("(0, 0, 1, 2)"), K("(0, 0, 0, 3)"), K("(0, 1, 0, 2)"),
                                          K("(0, 1, 1, 1)")});
  CHECK(k_vertices(5).size() == 14);
  CHECK_THROWS_AS(KPoint(v("(1, 0)")), DomainError);
}

TEST_CASE("boundary insertion") {
  CHECK(boundary_insert(K("(0, 1)"), K("(0, 1)"), 1) == K("(0, 1, 1)"));
  CHECK(boundary_insert(K("(0, 1)"), K("(0, 1)"), 2) == K("(0, 0, 2)"));
  CHECK(boundary_insert(K("(0, 1)"), K("(0, 1, 1)"), 1) == K("(0, 1, 1, 1)"));
  CHECK(boundary_insert_dual(K("(0, 1)"), K("(0, 1)"), 2) == K("(0, 1, 1)"));
  CHECK(boundary_insert_dual(K("(0, 1)"), K("(0, 1)"), 1) == K("(0, 0, 2)"));
  CHECK(boundary_insert(KPoint(), K("(0, 0, 2)"), 1) == K("(0, 0, 2)"));
  CHECK(boundary_insert(K("(0, 0, 2)"), KPoint(), 2) == K("(0, 0, 2)"));
}

TEST_CASE("faces") {
  CHECK(in_special_face(K("(0, 0, 2)"), 2));
  CHECK(in_special_face(K("(0, 1, 1)"), 1));
  CHECK_FALSE(on_boundary(K("(0, 1/2, 3/2)")));
  KDecomposition d = face_decompose(K("(0, 1, 1)"));
  CHECK(d.face == KFaceId{1, 2, 2});
  CHECK(d.rho == K("(0, 1)"));
  CHECK(d.tau == K("(0, 1)"));
  KDecomposition e = face_decompose(K("(0, 0, 2)"));
  CHECK(e.face == KFaceId{2, 2, 2});
  KDecomposition f = face_decompose(K("(0, 1, 1, 1)"));
  CHECK(f.face == KFaceId{1, 2, 3});
  CHECK(f.rho == K("(0, 1)"));
  CHECK(f.tau == K("(0, 1, 1)"));
  CHECK_THROWS_AS(face_decompose(K("(0, 1/2, 3/2)")), DomainError);
}

TEST_CASE("monoid product") {
  KPoint a2 = K("(0, 1)");
  CHECK(monoid_product(a2, a2) == K("(0, 1, 1)"));
  CHECK(monoid_product(monoid_product(a2, a2), a2) == K("(0, 1, 1, 1)"));
  CHECK(monoid_product(a2, monoid_product(a2, a2)) == K("(0, 1, 1, 1)"));
}

TEST_CASE("operad grafting") {
  CHECK(graft0(K("(0, 1)"), {KPoint(), KPoint()}) == K("(0, 1)"));
  CHECK(graft0(K("(0, 1)"), {K("(0, 1)"), KPoint()}) == K("(0, 1, 1)"));
}

TEST_CASE("tree vertices lie on the polytope and the H-polytope hull") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<RatVec> ext = vertex_enum(k_hrep(n));
    for (const auto& p : k_vertices(n)) CHECK(contains(k_hrep(n), p.u()));
    // Every extreme point of the inequality system is a tree vertex.
    for (const auto& x : ext) CHECK(k_vertices(n).count(KPoint(x)) == 1);
  }
}

TEST_CASE("random points decompose back") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    KPoint p = random_k(rng, 5, 3);
    for (const auto& d : face_decompositions(p)) CHECK(boundary_insert(d.rho, d.tau, d.face.j) == p);
  }
}
