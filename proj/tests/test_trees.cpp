#include <doctest.h>

#include "assoc/associahedron.hpp"
#include "assoc/errors.hpp"
#include "assoc/hrep.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/trees.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::v;

TEST_CASE("trivalent enumeration") {
  const std::size_t want[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(enum_trivalent(n).size() == want[n - 1]);
  CHECK(enum_trivalent(4).front() == parse_word("x1x2@x3@x4@"));
  CHECK_THROWS_AS(enum_trivalent(13), SizeLimitError);
  CHECK_THROWS_AS(enum_trivalent(0), DomainError);
}

TEST_CASE("shadows") {
  CHECK(shadow_a(parse_word("x1x2@x3@")) == v("(0, 1, 1)"));
  CHECK(shadow_a(parse_word("x1x2x3@@")) == v("(0, 0, 2)"));
  CHECK(shadow_a(parse_word("x1x2@")) == v("(0, 1)"));
  CHECK(shadow_a(TrivalentTree::leaf()) == v("(0)"));
  CHECK(shadow_b(parse_word("x1x2@x3@")) == v("(2, 0, 0)"));
}

TEST_CASE("words") {
  TrivalentTree left = TrivalentTree::join(TrivalentTree::join(TrivalentTree::leaf(), TrivalentTree::leaf()),
                                           TrivalentTree::leaf());
  CHECK(word(left) == "x1x2@x3@");
  CHECK(word_primed(left) == "@@x1x2x3");
  CHECK(bracketed(left) == "((x1x2)x3)");
  CHECK(parse_word("x1x2x3@@") ==
        TrivalentTree::join(TrivalentTree::leaf(), TrivalentTree::join(TrivalentTree::leaf(), TrivalentTree::leaf())));
  CHECK(parse_word_primed("@x1@x2x3") == parse_word("x1x2x3@@"));
  CHECK_THROWS_AS(parse_word("x1@"), ParseError);
  try {
    parse_word("x1x2@@");
  } catch (const ParseError& e) {
    CHECK(e.token_index == 4);
  }
}

TEST_CASE("bearded trees") {
  const unsigned long long want[] = {1, 2, 6, 21};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enum_bearded(n).size() == want[n - 1]);
    CHECK(count_bearded(n) == want[n - 1]);
  }
  CHECK(enum_bearded(5).size() == count_bearded(5));
  CHECK(v_coords(parse_bearded("x1x2♯♮")) == v("(0, 3/2)"));
  CHECK(v_coords(parse_bearded("x1x2#n")) == v("(0, 3/2)"));
  CHECK(v_coords(parse_bearded("x1♮x2♮♭")) == v("(1/2, 1)"));
  CHECK(v_coords(parse_bearded("x1nx2nb")) == v("(1/2, 1)"));
  CHECK(v_coords(parse_bearded("x1n")) == v("(1/2)"));
  CHECK(bearded_word(parse_bearded("x1nx2nb"), true) == "x1♮x2♮♭");
  CHECK_THROWS_AS(parse_bearded("x1x2#"), ParseError);
  CHECK_THROWS_AS(parse_bearded("x1nn"), ParseError);
}

TEST_CASE("the half-lattice J_L(3)") {
  std::set<RatVec> want{v("(0, 0, 5/2)"), v("(0, 1, 3/2)"),   v("(0, 3/2, 1)"),
                        v("(1/2, 0, 2)"), v("(1/2, 1/2, 3/2)"), v("(1/2, 1, 1)")};
  CHECK(j_lattice(3) == want);
  // hull(J_L(3)) = J(3): the extreme points lie in J_L(3) and J_L(3) lies in J(3).
  for (const auto& x : vertex_enum(j_hrep(3, Rat(1, 2)))) CHECK(want.count(x) == 1);
  for (const auto& x : want) CHECK(in_j(x, Rat(1, 2)));
}

TEST_CASE("dual lattices") {
  std::set<RatVec> want{v("(1, 2, 0, 0)"), v("(2, 1, 0, 0)"), v("(3, 0, 0, 0)"), v("(2, 0, 1, 0)"), v("(1, 1, 1, 0)")};
  CHECK(k_lattice_dual(4) == want);
  for (const auto& x : j_lattice_dual(3)) CHECK(sum(x) == Rat(5, 2));
}
