#include <doctest.h>

#include <set>
#include <sstream>

#include "assoc/barcx.hpp"
#include "assoc/errors.hpp"
#include "assoc/export.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::v;

TEST_CASE("polytope JSON round trip") {
  for (std::size_t n = 1; n <= 5; ++n) {
    PolytopeData k = polytope_data("k", n, Rat(0));
    CHECK(polytope_from_json(to_json(k)) == k);
    PolytopeData j = polytope_data("j", n, Rat(1, 3));
    CHECK(polytope_from_json(to_json(j)) == j);
  }
  CHECK(polytope_data("k", 4, Rat(0)).vertices.size() == 5);
  CHECK(polytope_data("j", 3, Rat(1, 2)).vertices.size() == 6);
  CHECK_THROWS_AS(polytope_from_json("{"), ParseError);
  CHECK_THROWS_AS(polytope_from_json("{\"family\": \"q\"}"), ParseError);
  CHECK_THROWS_AS(polytope_data("k", 10, Rat(0)), SizeLimitError);
}

TEST_CASE("OFF output") {
  std::string off = to_off(polytope_data("k", 4, Rat(0)));
  CHECK(off.rfind("OFF\n5 1 5\n", 0) == 0);
  std::istringstream k5(to_off(polytope_data("k", 5, Rat(0))));
  std::string head;
  long nv = 0, nf = 0, ne = 0;
  k5 >> head >> nv >> nf >> ne;
  CHECK(head == "OFF");
  CHECK(nv == 14);
  std::set<long> used;
  for (long i = 0; i < nv; ++i) {
    std::string x, y, z;
    k5 >> x >> y >> z;
  }
  for (long f = 0; f < nf; ++f) {
    long k = 0;
    k5 >> k;
    for (long i = 0; i < k; ++i) {
      long idx = 0;
      k5 >> idx;
      used.insert(idx);
    }
  }
  // one lattice point sits inside a facet and belongs to no face
  CHECK(used.size() == 13);
  CHECK(static_cast<long>(used.size()) - ne + nf == 2);
  CHECK_THROWS_AS(to_off(polytope_data("k", 6, Rat(0))), SizeLimitError);
}

TEST_CASE("bar complex JSON") {
  FiniteMonoid c2 = FiniteMonoid::builtin("c2");
  std::string s = to_json(build_bar(BarContext(c2, parse_ends("*x*"), BarModel::Strict), 2), c2);
  CHECK(s.find("\"cells\"") != std::string::npos);
}
