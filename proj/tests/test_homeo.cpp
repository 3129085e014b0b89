#include <doctest.h>

#include "assoc/associahedron.hpp"
#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"
#include "assoc/homeo.hpp"
#include "assoc/sampling.hpp"
#include "helpers.hpp"

using namespace assoc;
using testutil::q;
using testutil::v;

namespace {
KPoint K(std::string_view s) { return KPoint(v(s)); }
JPoint J(std::string_view s, const Rat& a) { return JPoint(v(s), a); }
const Rat kHalf(1, 2);
}  // namespace

TEST_CASE("special points") {
  CHECK(alpha(kHalf, 2) == K("(0, 1)"));
  CHECK(alpha(kHalf, 4) == K("(0, 3/4, 1, 5/4)"));
  CHECK(alpha(Rat(1), 3) == K("(0, 1/2, 3/2)"));
  CHECK(beta(kHalf, 3) == J("(1/2, 1, 1)", kHalf));
  CHECK_THROWS_AS(alpha(kHalf, 1), DomainError);
}

// Values computed by an independent rational prototype.
TEST_CASE("omega on fixed points") {
  struct Row {
    const char *sigma, *half, *one;
  };
  const Row rows[] = {
      {"(0, 0, 2)", "(1/2, 0, 2)", "(1, 0, 2)"},
      {"(0, 1, 1)", "(0, 3/2, 1)", "(0, 2, 1)"},
      {"(0, 1/2, 3/2)", "(1/2, 2/3, 4/3)", "(1, 1, 1)"},
      {"(0, 0, 1, 2)", "(1/2, 0, 1, 2)", "(1, 0, 1, 2)"},
      {"(0, 1, 0, 2)", "(0, 3/2, 0, 2)", "(0, 2, 0, 2)"},
      {"(0, 1/3, 2/3, 2)", "(1/2, 4/9, 2/3, 17/9)", "(1, 2/3, 2/3, 5/3)"},
  };
  for (const auto& r : rows) {
    CHECK(omega(kHalf, K(r.sigma)) == J(r.half, kHalf));
    CHECK(omega(Rat(1), K(r.sigma)) == J(r.one, Rat(1)));
  }
  CHECK(omega(kHalf, KPoint()) == J("(1/2)", kHalf));
  CHECK(omega(kHalf, K("(0, 1)")) == beta(kHalf, 2));
  CHECK(omega(kHalf, alpha(kHalf, 4)) == beta(kHalf, 4));
  CHECK(omega(Rat(0), K("(0, 1/3, 2/3, 2)")).v() == v("(0, 1/3, 2/3, 2)"));
}

TEST_CASE("eta") {
  KPoint s = K("(0, 1/2, 3/2)");
  CHECK(eta(kHalf, Rat(0), s).v() == s.u());
  CHECK(eta(kHalf, Rat(1), s) == omega(kHalf, s));
  CHECK(eta1(Rat(1), s) == embed_in_k(omega(Rat(1), s)));
}

TEST_CASE("Stasheff degeneracies on fixed points") {
  const char* a[] = {"(0, 1, 1)", "(0, 0, 2)", "(0, 0, 2)", "(0, 0, 2)"};
  const char* b[] = {"(0, 0, 2)", "(0, 0, 2)", "(0, 1, 1)", "(0, 1, 1)"};
  for (std::size_t j = 1; j <= 4; ++j) {
    CHECK(d_s(j, K("(0, 0, 1, 2)")) == K(a[j - 1]));
    CHECK(d_s(j, K("(0, 1, 0, 2)")) == K(b[j - 1]));
    CHECK(d_s(j, alpha(Rat(1), 4)) == alpha(Rat(1), 3));
  }
  CHECK(d_s(1, K("(0, 1)")) == KPoint());
  CHECK(d_s(2, K("(0, 0, 2)")) == K("(0, 1)"));
}

TEST_CASE("omega does not intertwine the degeneracies at n = 3") {
  // d^J_3 omega(0, 1, 1) leaves J_0(2) while omega always lands there.
  JPoint lhs = d_j(3, omega(Rat(1), K("(0, 1, 1)")));
  CHECK(lhs == J("(0, 2)", Rat(1)));
  CHECK_FALSE(in_j_zero(lhs));
  CHECK_FALSE(lhs == omega(Rat(1), d_s(3, K("(0, 1, 1)"))));
}

TEST_CASE("rescaling") {
  CHECK(pi_geometric(J("(1/4, 5/4)", kHalf)) == K("(0, 1)"));
  CHECK(rescale(kHalf, J("(1/4, 5/4)", kHalf)) == J("(1/8, 9/8)", Rat(1, 4)));
  CHECK(pi_geometric(J("(1/2, 1/2, 3/2)", kHalf)) == K("(0, 0, 2)"));
  CHECK(rescale(kHalf, J("(1/2, 1/2, 3/2)", kHalf)) == J("(1/4, 1/4, 7/4)", Rat(1, 4)));
  CHECK(rescale(Rat(1), J("(1/4, 5/4)", kHalf)) == J("(1/4, 5/4)", kHalf));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(pi_geometric(beta(kHalf, n)).u() == beta(Rat(0), n).v());
  KPoint s = K("(0, 1/3, 2/3, 2)");
  CHECK(pi_geometric(JPoint(s.u(), Rat(0))) == s);
  CHECK_THROWS_AS(pi_geometric(J("(1, 1)", Rat(1))), DomainError);
}

TEST_CASE("formal expressions") {
  KPoint tau = K("(0, 1/2, 3/2)");
  auto b = make_base(beta(Rat(1, 3), 1));
  auto g = make_delta_graft(tau, {b, b, b});
  CHECK(parameter(*g) == Rat(1, 3));
  CHECK(evaluate(*f_ab(Rat(1, 3), Rat(1, 3), g)) == evaluate(*g));
  CHECK(evaluate(*f_ab(Rat(1, 3), Rat(0), g)).v() == tau.u());
  auto ins = make_delta_j(1, make_base(J("(1/4, 5/4)", kHalf)), K("(0, 1)"));
  CHECK(evaluate(*ins) == J("(0, 5/4, 5/4)", kHalf));
  CHECK_THROWS_AS(f_ab(Rat(1, 3), kHalf, ins), DomainError);
  CHECK_THROWS_AS(f_ab(Rat(1), kHalf, ins), DomainError);
  auto rel = make_delta_rel(make_base(J("(1/2, 3/2)", Rat(1))), {make_base(J("(1/2)", kHalf)), make_base(J("(1/2)", kHalf))});
  CHECK(parameter(*rel) == Rat(1));
  CHECK(evaluate(*rel) == J("(3/4, 5/4)", Rat(1)));
}
