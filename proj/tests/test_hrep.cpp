#include <doctest.h>

#include "assoc/associahedron.hpp"
#include "assoc/hrep.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::q;
using testutil::v;

TEST_CASE("containment") {
  HRep h{2, {}, {Halfspace{v("(1, 0)"), Rat(0)}}};
  CHECK(contains(h, v("(0, 1)")));
  CHECK_FALSE(contains(h, v("(1, 0)")));
  CHECK(contains(k_hrep(3), v("(0, 1/2, 3/2)")));
}

TEST_CASE("ray exits") {
  RayExit e = ray_exit(k_hrep(3), v("(0, 1/2, 3/2)"), v("(0, 3/4, 5/4)"));
  CHECK(e.exit == v("(0, 1, 1)"));
  CHECK(e.t == Rat(1, 2));
  RayExit b = ray_exit(k_hrep(3), v("(0, 1/2, 3/2)"), v("(0, 1, 1)"));
  CHECK(b.exit == v("(0, 1, 1)"));
  CHECK(b.t == 0);
}

TEST_CASE("vertex enumeration") {
  CHECK(vertex_enum(k_hrep(3)) == std::set<RatVec>{v("(0, 0, 2)"), v("(0, 1, 1)")});
  CHECK(vertex_enum(k_hrep(2)) == std::set<RatVec>{v("(0, 1)")});
  HRep square{2,
              {Halfspace{v("(1, 0)"), Rat(1)}, Halfspace{v("(-1, 0)"), Rat(0)}, Halfspace{v("(0, 1)"), Rat(1)},
               Halfspace{v("(0, -1)"), Rat(0)}},
              {}};
  CHECK(vertex_enum(square).size() == 4);
}

TEST_CASE("tight inequalities at a vertex") {
  CHECK_FALSE(tight_inequalities(k_hrep(3), v("(0, 0, 2)")).empty());
  CHECK(tight_inequalities(k_hrep(3), v("(0, 1/2, 3/2)")).empty());
}
