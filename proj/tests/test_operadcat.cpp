#include <doctest.h>

#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"
#include "assoc/operadcat.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::v;

namespace {
KPoint K(std::string_view s) { return KPoint(v(s)); }
}  // namespace

TEST_CASE("K tuples") {
  KMorphism f = make_k_morphism({KPoint(), K("(0, 1)")});
  CHECK(f.source == 0);
  CHECK(f.target == 1);
  CHECK(compose_k(k_identity(1), f) == f);
  CHECK(compose_k(f, k_identity(0)) == f);
  KMorphism g = make_k_morphism({K("(0, 1)"), KPoint(), KPoint()});
  KMorphism gf = compose_k(g, f);
  CHECK(gf.source == 0);
  CHECK(gf.target == 2);
  CHECK_THROWS_AS(compose_k(f, g), DomainError);
}

TEST_CASE("degeneracy lists") {
  CHECK(compose_deg({1}, {2}) == DegIndexList{1, 2});
  CHECK(compose_deg({}, {2}) == DegIndexList{2});
  CHECK(compose_deg({2}, {2}) == DegIndexList{2, 3});
  CHECK_THROWS_AS(check_deg_list({2, 1}, 3), DomainError);
  CHECK_THROWS_AS(check_deg_list({4}, 3), DomainError);
}

TEST_CASE("pushing a degeneracy through a tuple") {
  KMorphism t = make_k_morphism({KPoint(), K("(0, 1)"), KPoint()});  // 1 -> 2
  auto [t2, e] = push_deg(2, t);
  CHECK(t2.source == 1);
  CHECK(e.empty());
  auto [t3, e3] = push_deg(1, make_k_morphism({KPoint(), KPoint(), KPoint()}));
  CHECK(e3 == DegIndexList{1});
  CHECK(t3.source == 0);
}

TEST_CASE("representations") {
  KPoint s = K("(0, 1/2, 3/2)");
  CHECK(std::get<KPoint>(rep_apply(Rep::KBar, unital(k_identity(1)), s)) == s);
  UnitalMorphism f = unital(make_k_morphism({KPoint(), K("(0, 1)"), KPoint()}));
  CHECK(std::get<KPoint>(rep_apply(Rep::KBar, f, s)) == boundary_insert(s, K("(0, 1)"), 2));
  KPoint s4 = K("(0, 1/2, 1, 3/2)");
  CHECK(std::get<KPoint>(rep_apply(Rep::KBreve, unital_deg({1}, 2), s4)) == d_k(2, s4));
  CHECK_THROWS_AS(rep_apply(Rep::KBar, unital_deg({1}, 2), s4), DomainError);
  JPoint p(v("(1/2, 1, 1)"), Rat(1, 2));
  CHECK_THROWS_AS(rep_apply(Rep::J0Bar, unital(k_identity(1)), JPoint(v("(0, 1, 3/2)"), Rat(1, 2))), DomainError);
  CHECK(std::get<JPoint>(rep_apply(Rep::J0Bar, unital(k_identity(1)), p)) == p);
}

TEST_CASE("unital composition across the prime") {
  UnitalMorphism j = unital(j_unit(1, Rat(1, 2)));
  CHECK(j.source() == Obj{1, false});
  CHECK(j.target() == Obj{1, true});
  UnitalMorphism kp = unital(k_identity(1), true);
  CHECK(compose(kp, j) == j);
  CHECK_THROWS_AS(compose(unital(k_identity(1)), kp), DomainError);
}
