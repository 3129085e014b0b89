// Acceptance run: one PASS/FAIL line per criterion.
//
// Criteria listed in kKnownFailures are statements that do not hold as
// stated; they still print FAIL, but do not change the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "assoc/associahedron.hpp"
#include "assoc/barcx.hpp"
#include "assoc/errors.hpp"
#include "assoc/hrep.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/trees.hpp"
#include "assoc/verify.hpp"

using namespace assoc;

namespace {

const std::set<int> kKnownFailures{1, 5, 9};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// Every check whose name has one of the prefixes must pass with at least
// `min_cases` cases. At least one check must match each prefix.
void require(const SuiteReport& rep, const std::vector<std::string>& prefixes, std::size_t min_cases, Outcome& out,
             std::size_t* fewest = nullptr) {
  for (const auto& p : prefixes) {
    bool seen = false;
    for (const auto& c : rep.checks) {
      if (!starts_with(c.name, p)) continue;
      seen = true;
      if (fewest) *fewest = std::min(*fewest, c.cases);
      if (!c.ok())
        out.fail("'" + c.name + "' failed " + std::to_string(c.failures) + "/" + std::to_string(c.cases) +
                 ", e.g. " + c.counterexample);
      else if (c.cases < min_cases)
        out.fail("'" + c.name + "' ran " + std::to_string(c.cases) + " < " + std::to_string(min_cases) + " cases");
    }
    if (!seen) out.fail("no check named '" + p + "' in " + rep.suite);
  }
}

std::string join(const std::vector<long long>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Outcome crit1() {
  Outcome o;
  std::vector<long long> counts;
  const std::vector<std::size_t> want{1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t n = 1; n <= 8; ++n) {
    counts.push_back(static_cast<long long>(enum_trivalent(n).size()));
    if (enum_trivalent(n).size() != want[n - 1] || k_lattice(n).size() != want[n - 1])
      o.fail("tree count at n=" + std::to_string(n));
  }
  std::vector<long long> extreme;
  std::size_t first_diff = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    HRep h = k_hrep(n);
    auto ext = vertex_enum(h);
    auto lat = k_lattice(n);
    extreme.push_back(static_cast<long long>(ext.size()));
    for (const auto& p : lat)
      if (!contains(h, p)) o.fail("lattice point outside K(" + std::to_string(n) + "): " + str(p));
    for (const auto& p : ext)
      if (!lat.count(p)) o.fail("extreme point not a tree vertex: " + str(p));
    if (ext != lat && first_diff == 0) first_diff = n;
  }
  if (o.pass && first_diff != 0)
    o.fail("inequality system has " + join(extreme) + " extreme points for n=1..6, tree vertices " +
           join(std::vector<long long>(counts.begin(), counts.begin() + 6)) + "; sets differ from n=" +
           std::to_string(first_diff) + ", every extreme point is a tree vertex");
  if (o.pass) o.detail = "counts " + join(counts) + "; extreme points equal tree vertices for n<=6";
  return o;
}

Outcome crit2() {
  Outcome o;
  std::set<RatVec> k4;
  for (const char* s : {"(0,0,2,1)", "(0,0,1,2)", "(0,0,0,3)", "(0,1,0,2)", "(0,1,1,1)"}) k4.insert(parse_ratvec(s));
  std::set<RatVec> got;
  for (const auto& p : k_vertices(4)) got.insert(p.u());
  if (got != k4) o.fail("K(4) vertex set differs");
  if (k_lattice(4) != k4) o.fail("K_L(4) differs");
  std::set<RatVec> dual;
  for (const char* s : {"(1,2,0,0)", "(2,1,0,0)", "(3,0,0,0)", "(2,0,1,0)", "(1,1,1,0)"}) dual.insert(parse_ratvec(s));
  if (k_lattice_dual(4) != dual) o.fail("K'(4) differs from the dual list");
  if (o.pass) o.detail = "K(4) and K'(4) match";
  return o;
}

Outcome crit3() {
  Outcome o;
  const Rat half(1, 2);
  std::set<RatVec> j3;
  for (const char* s : {"(0,0,5/2)", "(0,1,3/2)", "(0,3/2,1)", "(1/2,0,2)", "(1/2,1/2,3/2)", "(1/2,1,1)"})
    j3.insert(parse_ratvec(s));
  if (j_lattice(3, half) != j3) o.fail("J_L(3) differs from the six points");
  HRep h = j_hrep(3, half);
  for (const auto& p : j3)
    if (!contains(h, p)) o.fail("J_L(3) point outside J(3): " + str(p));
  for (const auto& p : vertex_enum(h))
    if (!j3.count(p)) o.fail("extreme point of J(3) outside J_L(3): " + str(p));
  std::vector<long long> counts;
  const std::vector<std::size_t> want{1, 2, 6, 21};
  for (std::size_t n = 1; n <= 5; ++n) {
    counts.push_back(static_cast<long long>(j_lattice(n, half).size()));
    if (n <= 4 && j_lattice(n, half).size() != want[n - 1]) o.fail("J_L count at n=" + std::to_string(n));
  }
  std::size_t brute = enum_bearded(5).size();
  unsigned long long rec = count_bearded(5);
  if (brute != rec || j_lattice(5, half).size() != brute)
    o.fail("n=5: enumeration " + std::to_string(brute) + ", recursion " + std::to_string(rec));
  if (o.pass) o.detail = "J_L(3) and hull match; counts " + join(counts) + " (n=5: enumeration = recursion = " +
                         std::to_string(rec) + ")";
  return o;
}

Outcome crit4() {
  Outcome o;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : enum_bearded(n)) {
      ++total;
      RatVec v = v_coords(t);
      if (sum(v) != Rat(static_cast<long>(2 * n - 1), 2)) o.fail("sum at " + bearded_word(t));
      for (std::size_t i = 1; i <= n; ++i)
        if (sum(v, 0, i) > Rat(static_cast<long>(2 * i - 1), 2)) o.fail("prefix " + std::to_string(i) + " at " + bearded_word(t));
    }
  if (o.pass) o.detail = std::to_string(total) + " bearded trees, n<=8";
  return o;
}

Outcome crit5() {
  Outcome o;
  VerifyOptions opt{6, 16000, 11};
  SuiteReport rep = verify_degeneracy(opt);
  std::size_t fewest = SIZE_MAX;
  require(rep,
          {"xi bounds", "xi deficit at most one", "xi fixes the tail after deficit one", "xi first entry at least one",
           "xi block below the bound", "xi block above the bound", "xi block inside"},
          10000, o, &fewest);
  CheckResult start = xi_block_statement_at_start(VerifyOptions{6, 10000, 11});
  if (!start.ok())
    o.fail("block statement fails at k=1 in " + std::to_string(start.failures) + "/" + std::to_string(start.cases) +
           " cases, e.g. " + start.counterexample + " (holds for k>=2)");
  if (o.pass) o.detail = "all statements, >= " + std::to_string(fewest) + " cases each";
  return o;
}

Outcome crit6() {
  Outcome o;
  SuiteReport rep = verify_degeneracy(VerifyOptions{7, 1500, 12});
  std::size_t fewest = SIZE_MAX;
  require(rep, {"xi maps K(n) into 0 x K(n-1)", "xi maps J(n) into 0 x J(n-1)"}, 1000, o, &fewest);
  if (o.pass) o.detail = ">= " + std::to_string(fewest) + " points each, n<=7";
  return o;
}

Outcome crit7() {
  Outcome o;
  SuiteReport rep = verify_degeneracy(VerifyOptions{6, 1000, 13});
  std::size_t fewest = SIZE_MAX;
  require(rep,
          {"xi on K faces", "xi on J faces", "K degeneracy on faces", "J degeneracy on insertions",
           "J degeneracy on grafts", "interpolated degeneracy on faces"},
          100, o, &fewest);
  if (o.pass) o.detail = "every branch >= " + std::to_string(fewest) + " cases, n<=6";
  return o;
}

Outcome crit8() {
  Outcome o;
  std::size_t fewest = SIZE_MAX;
  SuiteReport b = verify_boundary(VerifyOptions{7, 1200, 14});
  require(b, {"boundary relation", "dual boundary relation"}, 1000, o, &fewest);
  SuiteReport d = verify_delta(VerifyOptions{7, 2000, 14});
  require(d, {"delta relation", "delta insertion into a graft", "graft over a boundary insertion"}, 1000, o, &fewest);
  SuiteReport b5 = verify_boundary(VerifyOptions{5, 300, 15});
  require(b5, {"boundary covered by faces", "special faces match decompositions"}, 1, o);
  SuiteReport d5 = verify_delta(VerifyOptions{5, 300, 15});
  require(d5, {"J boundary covered by faces", "J_0 matches graft decompositions", "sweep decomposition round trip"}, 1, o);
  if (o.pass) o.detail = "relations >= " + std::to_string(fewest) + " cases each, n<=7; covering n<=5";
  return o;
}

Outcome crit9() {
  Outcome o;
  SuiteReport rep = verify_omega(VerifyOptions{5, 400, 16});
  require(rep,
          {"omega lands in J_0", "omega at a = 0 is the identity", "omega on boundary insertions", "omega well defined",
           "Stasheff degeneracy", "omega injective on lattice vertices", "omega intertwines degeneracies",
           "omega at a = 1 intertwines degeneracies"},
          1, o);
  if (o.pass) o.detail = "all omega statements, n<=5";
  return o;
}

Outcome crit10() {
  Outcome o;
  std::size_t fewest = SIZE_MAX;
  SuiteReport rep = verify_boundary(VerifyOptions{6, 1200, 17});
  require(rep, {"monoid product associative", "monoid product left compatibility", "monoid product right compatibility"},
          1000, o, &fewest);
  if (o.pass) o.detail = ">= " + std::to_string(fewest) + " triples each, arities<=6";
  return o;
}

Outcome crit11() {
  Outcome o;
  std::size_t fewest = SIZE_MAX;
  SuiteReport rep = verify_operad(VerifyOptions{4, 1200, 18});
  require(rep, {"composition associative", "functoriality of "}, 1000, o, &fewest);
  require(rep, {"degeneracy composition deletes positions", "degeneracy composition acts"}, 100, o);
  if (o.pass) o.detail = ">= " + std::to_string(fewest) + " triples per check, objects<=4; deletion oracle agrees";
  return o;
}

Outcome crit12() {
  Outcome o;
  FiniteMonoid c2 = FiniteMonoid::builtin("c2"), c3 = FiniteMonoid::builtin("c3");
  std::vector<long long> chis;
  for (std::size_t n = 0; n <= 8; ++n) {
    BarComplex bc = build_bar(BarContext(c2, parse_ends("*x*"), BarModel::Strict), n);
    for (std::size_t r = 0; r <= n; ++r)
      if (bc.count(r) != 1) o.fail("C2 rank " + std::to_string(r) + " count at n=" + std::to_string(n));
    chis.push_back(euler(bc));
    if (euler(bc) != (n % 2 == 0 ? 1 : 0)) o.fail("C2 euler characteristic at n=" + std::to_string(n));
  }
  BarComplex b3 = build_bar(BarContext(c3, parse_ends("*x*"), BarModel::Strict), 8);
  for (std::size_t r = 0; r <= 8; ++r)
    if (b3.count(r) != (std::size_t{1} << r)) o.fail("C3 rank " + std::to_string(r) + " count");
  SuiteReport rep = verify_bar(VerifyOptions{4, 300, 19});
  require(rep, {"normal forms confluent", "normal forms are normal", "attachments glue consistently", "primed model",
                "cell counts", "projective filtration counts"},
          1, o);
  if (o.pass) o.detail = "C2 euler " + join(chis) + "; C3 counts 2^r to rank 8; confluence exhaustive to rank 3";
  return o;
}

Outcome crit13() {
  Outcome o;
  std::size_t fewest = SIZE_MAX;
  SuiteReport rep = verify_omega(VerifyOptions{5, 400, 20});
  require(rep, {"projection on insertions", "projection of beta grafts", "projection commutes with degeneracies"}, 100, o,
          &fewest);
  if (o.pass) o.detail = ">= " + std::to_string(fewest) + " cases each, n<=5";
  return o;
}

template <class Fn>
bool rejects(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError&) {
    return true;
  }
  return false;
}

Outcome crit14() {
  Outcome o;
  std::size_t trees = 0, bearded = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enum_trivalent(n)) {
      ++trees;
      if (parse_word(word(t)) != t || parse_word_primed(word_primed(t)) != t) o.fail("round trip at " + word(t));
    }
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enum_bearded(n)) {
      ++bearded;
      for (bool u : {false, true})
        if (parse_bearded(bearded_word(t, u)) != t || parse_bearded_primed(bearded_word_primed(t, u)) != t)
          o.fail("bearded round trip at " + bearded_word(t));
    }
  const std::vector<std::string> bad_words{"", "x1@", "x1x2@@", "x1x2", "x2x1@", "x1x1@", "x1y2@", "x0", "@x1x2",
                                           "x1x2@x4@"};
  const std::vector<std::string> bad_primed{"", "@x1", "@@x1x2", "x1@x2", "@x1x2x3"};
  const std::vector<std::string> bad_bearded{"", "x1", "x1x2#", "x1nx2n", "x1nn", "x1x2nb", "x1nx2n#"};
  std::size_t rejected = 0;
  for (const auto& w : bad_words) {
    if (!rejects([&] { parse_word(w); })) o.fail("accepted '" + w + "'");
    ++rejected;
  }
  for (const auto& w : bad_primed) {
    if (!rejects([&] { parse_word_primed(w); })) o.fail("accepted primed '" + w + "'");
    ++rejected;
  }
  for (const auto& w : bad_bearded) {
    if (!rejects([&] { parse_bearded(w); })) o.fail("accepted bearded '" + w + "'");
    ++rejected;
  }
  if (o.pass)
    o.detail = std::to_string(trees) + " trees, " + std::to_string(bearded) + " bearded trees, " +
               std::to_string(rejected) + " malformed words rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{crit1, crit2,  crit3,  crit4,  crit5,  crit6,  crit7,
                                                       crit8, crit9, crit10, crit11, crit12, crit13, crit14};
  int unexpected = 0, passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s (%s) [%.1fs]\n", id, r.pass ? "PASS" : "FAIL", r.detail.c_str(), secs);
    std::fflush(stdout);
    if (r.pass) ++passed;
    else if (!kKnownFailures.count(id)) ++unexpected;
  }
  std::printf("%d/%zu criteria pass; known failures:", passed, criteria.size());
  for (int k : kKnownFailures) std::printf(" %d", k);
  std::printf("; unexpected failures: %d\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
