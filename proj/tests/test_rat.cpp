#include <doctest.h>

#include "assoc/coords.hpp"
#include "assoc/errors.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::q;
using testutil::v;

TEST_CASE("rationals parse and print canonically") {
  CHECK(q("3/6") == Rat(1, 2));
  CHECK(q("-4/2") == Rat(-2));
  CHECK(q("7") == Rat(7));
  CHECK(str(q("6/4")) == "3/2");
  CHECK(str(Rat(0)) == "0");
  CHECK(rat(2, 4) == Rat(1, 2));
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("x"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
}

TEST_CASE("vectors") {
  RatVec x = v("(0, 1/2, 3/2)");
  REQUIRE(x.size() == 3);
  CHECK(str(x) == "(0, 1/2, 3/2)");
  CHECK(sum(x) == 2);
  CHECK(sum(x, 1, 2) == Rat(1, 2));
  CHECK(reversed(x) == v("(3/2, 1/2, 0)"));
  CHECK(affine(Rat(1, 2), v("(0, 0, 2)"), v("(0, 1, 1)")) == x);
}

TEST_CASE("membership in J^a(n)") {
  CHECK(in_k(v("(0)")));
  CHECK(in_k(v("(0, 1)")));
  CHECK_FALSE(in_k(v("(1, 0)")));
  CHECK(in_k(v("(0, 1/2, 3/2)")));
  CHECK(in_j(v("(1/2)"), Rat(1, 2)));
  CHECK(in_j(v("(1/2, 1)"), Rat(1, 2)));
  CHECK_FALSE(in_j(v("(1, 1/2)"), Rat(1, 2)));
  CHECK_FALSE(in_j(v("(-1/2, 2)"), Rat(1, 2)));
}

TEST_CASE("insertion and grafting of coordinate blocks") {
  CHECK(insert_at(v("(0, 1)"), 1, v("(0, 1)")) == v("(0, 1, 1)"));
  CHECK(insert_at(v("(0, 1)"), 2, v("(0, 1)")) == v("(0, 0, 2)"));
  CHECK(graft(v("(0, 1)"), {v("(1/2)"), v("(1/2)")}, Rat(1, 2)) == v("(1/2, 1)"));
  CHECK(level(v("(1/2, 1)")) == Rat(1, 2));
  CHECK(compositions(3, 2).size() == 3);
}
