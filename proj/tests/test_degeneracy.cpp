#include <doctest.h>

#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"
#include "assoc/homeo.hpp"
#include "assoc/verify.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::v;

namespace {
KPoint K(std::string_view s) { return KPoint(v(s)); }
JPoint J(std::string_view s) { return JPoint(v(s), Rat(1, 2)); }

// Direct reading of the shift map, one Min/Max step at a time.
RatVec xi_oracle(const RatVec& t) {
  RatVec out;
  for (std::size_t k = 1; k <= t.size(); ++k) {
    if (k == 1) {
      out.push_back(std::max(Rat(0), Rat(t[0] - 1)));
      continue;
    }
    Rat best;
    for (std::size_t l = 1; l <= k; ++l) {
      Rat c = sum(t, 0, l) - Rat(l);
      if (l == 1 || c > best) best = c;
    }
    out.push_back(std::min(t[k - 1], Rat(best - sum(out) + Rat(k - 1))));
  }
  return out;
}
}  // namespace

TEST_CASE("shift map") {
  CHECK(xi(v("(0, 1, 1)")) == v("(0, 0, 1)"));
  CHECK(xi(v("(0, 0, 0, 0)")) == v("(0, 0, 0, 0)"));
  CHECK(xi(v("(2, 0)")) == v("(1, 0)"));
  CHECK_THROWS_AS(xi(v("(-1, 2)")), DomainError);
  for (const char* s : {"(3/4, 1/2, 5/2, 0, 1)", "(0, 0, 3, 1/4)", "(1, 1, 1, 1)", "(5/4, 0, 0, 2)"})
    CHECK(xi(v(s)) == xi_oracle(v(s)));
}

TEST_CASE("degeneracies") {
  CHECK(d_k(1, K("(0, 1, 1)")) == K("(0, 1)"));
  CHECK(d_k(2, K("(0, 1, 1)")) == K("(0, 1)"));
  CHECK(d_k(1, K("(0, 1)")) == KPoint());
  CHECK(d_j(1, J("(0, 3/2)")) == J("(1/2)"));
  CHECK(d_j(2, J("(1/2, 1)")) == J("(1/2)"));
  CHECK_THROWS_AS(d_k(4, K("(0, 1, 1)")), DomainError);
  CHECK_THROWS_AS(d_k(1, KPoint()), DomainError);
}

TEST_CASE("interpolated degeneracies") {
  KPoint s = K("(0, 1, 1)");
  for (std::size_t j = 1; j <= 3; ++j) {
    CHECK(interpolate_degeneracy(Rat(0), d_k, d_s, j, s) == d_k(j, s));
    CHECK(interpolate_degeneracy(Rat(1), d_k, d_s, j, s) == d_s(j, s));
    CHECK(interpolate_degeneracy(Rat(1, 2), d_k, d_s, j, s).u() ==
          affine(Rat(1, 2), d_k(j, s).u(), d_s(j, s).u()));
  }
  CHECK_THROWS_AS(interpolate_degeneracy(Rat(2), d_k, d_s, 1, s), DomainError);
}

TEST_CASE("xi statements on random vectors") {
  VerifyOptions o;
  o.n_max = 6;
  o.cases = 300;
  o.seed = 3;
  SuiteReport r = verify_degeneracy(o);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.counterexample);
    CHECK(c.ok());
    CHECK(c.cases > 0);
  }
}

TEST_CASE("the block statement fails at the first position") {
  VerifyOptions o;
  o.cases = 2000;
  CHECK(xi_block_statement_at_start(o).failures > 0);
}
