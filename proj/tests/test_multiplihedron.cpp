#include <doctest.h>

#include <variant>

#include "assoc/errors.hpp"
#include "assoc/hrep.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/sampling.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::q;
using testutil::v;

namespace {
const Rat kHalf(1, 2);
JPoint J(std::string_view s, const Rat& a = kHalf) { return JPoint(v(s), a); }
KPoint K(std::string_view s) { return KPoint(v(s)); }
}  // namespace

TEST_CASE("small multiplihedra") {
  CHECK(vertex_enum(j_hrep(1, kHalf)) == std::set<RatVec>{v("(1/2)")});
  CHECK(vertex_enum(j_hrep(2, Rat(1, 3))) == std::set<RatVec>{v("(0, 4/3)"), v("(1/3, 1)")});
  // The quadrilateral J(3).
  CHECK(vertex_enum(j_hrep(3, kHalf)) ==
        std::set<RatVec>{v("(0, 0, 5/2)"), v("(0, 3/2, 1)"), v("(1/2, 1, 1)"), v("(1/2, 0, 2)")});
  CHECK_THROWS_AS(J("(1, 1/2)"), DomainError);
}

TEST_CASE("embedding into K(n+1)") {
  CHECK(embed_in_k(J("(1/2)")) == K("(0, 1)"));
  CHECK(embed_in_k(J("(0, 3/2)")) == K("(0, 0, 2)"));
}

TEST_CASE("delta insertion and grafting") {
  CHECK(delta_insert(J("(1/2, 1)"), K("(0, 1)"), 1) == J("(0, 3/2, 1)"));
  CHECK(delta_insert(J("(1/2, 1)"), K("(0, 1)"), 2) == J("(1/2, 0, 2)"));
  CHECK(delta_insert(J("(1/2)"), K("(0, 1)"), 1) == J("(0, 3/2)"));
  CHECK(delta_graft(K("(0, 1)"), {J("(1/2)"), J("(1/2)")}) == J("(1/2, 1)"));
  CHECK(delta_graft(K("(0, 1)"), {J("(1/2)"), J("(0, 3/2)")}) == J("(1/2, 0, 2)"));
  // All factors beta_1: a + (1-a) tau componentwise.
  CHECK(delta_graft(K("(0, 0, 2)"), {J("(1/2)"), J("(1/2)"), J("(1/2)")}) == J("(1/2, 1/2, 3/2)"));
}

TEST_CASE("relative grafting") {
  for (const char* s : {"0", "1/2", "1"}) {
    Rat t = q(s);
    JPoint outer(RatVec{t, 2 - t}, Rat(1));
    JPoint p = delta_rel(outer, {J("(1/2)"), J("(1/2)")});
    CHECK(p == JPoint(RatVec{kHalf + t / 2, Rat(3, 2) - t / 2}, Rat(1)));
  }
}

TEST_CASE("special faces of J") {
  CHECK(in_j_zero(J("(1/2, 1)")));
  CHECK(j_face_membership(J("(0, 3/2)"), JSpecialFace{1}));
  CHECK_FALSE(on_boundary(J("(1/4, 5/4)")));
  CHECK(on_boundary(J("(1/2, 1)")));
}

TEST_CASE("sweep decomposition") {
  JPoint p(v("(3/4, 5/4)"), Rat(1));
  SweepResult s = sweep_decompose(p, kHalf);
  REQUIRE(std::holds_alternative<SweepGraft>(s));
  const auto& g = std::get<SweepGraft>(s);
  CHECK(g.outer == JPoint(v("(1/2, 3/2)"), Rat(1)));
  CHECK(g.rhos == std::vector<JPoint>{J("(1/2)"), J("(1/2)")});
  CHECK(recompose(s, Rat(1)) == p);

  SweepResult t = sweep_decompose(JPoint(v("(0, 2)"), Rat(1)), kHalf);
  REQUIRE(std::holds_alternative<SweepInJa>(t));
  CHECK(std::get<SweepInJa>(t).point == J("(0, 3/2)"));

  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    JPoint x = random_j(rng, 4, kHalf);
    SweepResult same = sweep_decompose(x, kHalf);
    REQUIRE(std::holds_alternative<SweepInJa>(same));
    CHECK(std::get<SweepInJa>(same).point == x);
  }
}
