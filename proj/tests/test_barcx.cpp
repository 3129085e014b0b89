#include <doctest.h>

#include "assoc/barcx.hpp"
#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::v;

namespace {
KPoint K(std::string_view s) { return KPoint(v(s)); }
}  // namespace

TEST_CASE("monoid tables") {
  FiniteMonoid c2 = FiniteMonoid::builtin("c2");
  CHECK(c2.size() == 2);
  CHECK(c2.mul(1, 1) == c2.unit());
  FiniteMonoid m = FiniteMonoid::parse("# a semilattice\nelements: e z\ntable: e z / z z\n");
  CHECK(m.mul(1, 1) == 1);
  CHECK_THROWS_AS(FiniteMonoid::parse("elements: e a b\ntable: e a b / a b e / b a e"), MonoidError);
  CHECK_THROWS_AS(FiniteMonoid::parse("elements: e a\ntable: e a"), MonoidError);
  CHECK_THROWS_AS(FiniteMonoid::builtin("c7"), MonoidError);
  try {
    FiniteMonoid({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
  } catch (const MonoidError& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }
}

TEST_CASE("normal forms") {
  FiniteMonoid c2 = FiniteMonoid::builtin("c2");
  BarContext ctx(c2, parse_ends("*x*"), BarModel::Strict);
  BarPoint inner{K("(0, 1/2, 3/2)"), BarCell{std::nullopt, {1}, std::nullopt}};
  CHECK(ctx.normal_form(inner) == inner);

  KPoint s = K("(0, 1/2, 1, 3/2)");
  BarPoint unit{s, BarCell{std::nullopt, {1, 0}, std::nullopt}};
  BarPoint nf = ctx.normal_form(unit);
  CHECK(nf.cell.x == std::vector<int>{1});
  CHECK(nf.sigma == d_k(3, s));

  // On the face K_2(2,2) the labels g, g multiply to e and collapse.
  BarPoint gg{K("(0, 0, 1, 2)"), BarCell{std::nullopt, {1, 1}, std::nullopt}};
  BarPoint down = ctx.normal_form(gg);
  CHECK(down.cell.rank() == 0);
  CHECK(down.sigma == K("(0, 1)"));
}

TEST_CASE("bar complexes") {
  FiniteMonoid c2 = FiniteMonoid::builtin("c2"), c3 = FiniteMonoid::builtin("c3"), triv = FiniteMonoid::builtin("triv");
  BarComplex p = build_bar(BarContext(c2, parse_ends("*x*"), BarModel::Strict), 5);
  for (std::size_t r = 0; r <= 5; ++r) CHECK(p.count(r) == 1);
  CHECK(euler(p) == 0);
  BarComplex t = build_bar(BarContext(triv, parse_ends("*x*"), BarModel::Strict), 3);
  CHECK(t.count(0) == 1);
  CHECK(t.count(1) == 0);
  CHECK(euler(t) == 1);
  BarComplex c = build_bar(BarContext(c3, parse_ends("*x*"), BarModel::Strict), 3);
  CHECK(c.count(0) == 1);
  CHECK(c.count(1) == 2);
  CHECK(c.count(2) == 4);
  CHECK(c.count(3) == 8);
  CHECK_THROWS_AS(build_bar(BarContext(c2, parse_ends("*x*"), BarModel::Strict), 9), SizeLimitError);
}

TEST_CASE("projective filtration") {
  FiniteMonoid c2 = FiniteMonoid::builtin("c2");
  ProjectiveFiltration f = projective_filtration(c2, 0);
  CHECK(f.p.count(0) == 1);
  ProjectiveFiltration g = projective_filtration(c2, 3);
  CHECK(g.d_top.size() == 1);
  CHECK(g.e.count(3) == 2);
  BarCell d{0, {1}, std::nullopt};
  CHECK(forget_left(d) == BarCell{std::nullopt, {1}, std::nullopt});
}

TEST_CASE("homomorphisms") {
  FiniteMonoid c2 = FiniteMonoid::builtin("c2"), triv = FiniteMonoid::builtin("triv");
  CHECK(is_homomorphism(c2, triv, {0, 0}));
  CHECK_FALSE(is_homomorphism(triv, c2, {1}));
}
