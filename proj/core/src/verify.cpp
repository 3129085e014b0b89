#include "assoc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "assoc/associahedron.hpp"
#include "assoc/barcx.hpp"
#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"
#include "assoc/homeo.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/operadcat.hpp"
#include "assoc/sampling.hpp"
#include "assoc/trees.hpp"

namespace assoc {

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

const CheckResult* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Check::expect(bool ok, const std::function<std::string()>& describe) {
  ++r_.cases;
  if (!ok && r_.failures++ == 0) r_.counterexample = describe();
}

void Check::run(const std::function<bool()>& body, const std::function<std::string()>& describe) {
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  expect(ok, [&] { return err.empty() ? describe() : describe() + " threw: " + err; });
}

namespace {

std::string show(const KPoint& p) { return str(p.u()); }
std::string show(const JPoint& p) { return str(p.v()) + " a=" + str(p.a()); }

std::uint64_t mix(std::uint64_t seed, std::string_view salt) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : salt) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

Rat pick_a(Rng& rng) {
  static const std::vector<Rat> as{Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)};
  return rng.pick(as);
}

// Positive parts summing to total.
std::vector<std::size_t> random_parts(Rng& rng, std::size_t total, std::size_t parts) {
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < total; ++i) cuts.push_back(i);
  std::shuffle(cuts.begin(), cuts.end(), rng.engine());
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (auto c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

KPoint kpt(const RatVec& v) { return KPoint(v); }

RatVec prepend_zero(const RatVec& v) {
  RatVec out{Rat(0)};
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Tries up to 64 draws for one case satisfying a branch condition.
template <class Draw>
bool draw_until(Draw&& draw) {
  for (int i = 0; i < 64; ++i)
    if (draw()) return true;
  return false;
}

// ---------------------------------------------------------------- boundary

SuiteReport boundary_suite(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "boundary"));
  const std::size_t N = std::max<std::size_t>(o.n_max, 1);
  SuiteReport rep{"boundary", {}};

  // d_k(sigma) o d_j(tau) applied to rho, in both the plain and dual forms.
  for (int dual = 0; dual < 2; ++dual) {
    const char* names[3] = {"boundary relation k < j", "boundary relation j <= k < j+t", "boundary relation k >= j+t"};
    auto ins = [dual](const KPoint& rho, const KPoint& tau, std::size_t j) {
      return dual ? boundary_insert_dual(rho, tau, j) : boundary_insert(rho, tau, j);
    };
    for (int c = 0; c < 3; ++c) {
      Check chk(std::string(dual ? "dual " : "") + names[c]);
      for (std::size_t tries = 0; chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
        std::size_t r = 0, t = 0, s = 0, j = 0, k = 0;
        bool found = draw_until([&] {
          r = rng.index(1, N), t = rng.index(1, N), s = rng.index(1, N);
          if (r + t + s > N + 2) return false;
          j = rng.index(1, r);
          k = rng.index(1, r + t - 1);
          return c == 0 ? k < j : c == 1 ? (j <= k && k < j + t) : k >= j + t;
        });
        if (!found) continue;
        KPoint rho = random_k(rng, r), tau = random_k(rng, t), sigma = random_k(rng, s);
        chk.run(
            [&] {
              KPoint lhs = ins(ins(rho, tau, j), sigma, k);
              KPoint rhs = c == 0   ? ins(ins(rho, sigma, k), tau, j + s - 1)
                           : c == 1 ? ins(rho, ins(tau, sigma, k - j + 1), j)
                                    : ins(ins(rho, sigma, k - t + 1), tau, j);
              return lhs == rhs;
            },
            [&] {
              return "rho=" + show(rho) + " tau=" + show(tau) + " sigma=" + show(sigma) + " j=" + std::to_string(j) +
                     " k=" + std::to_string(k);
            });
      }
      rep.checks.push_back(chk.result());
    }
  }

  {
    Check cover("boundary covered by faces");
    Check special("special faces match decompositions");
    for (std::size_t i = 0; i < o.cases; ++i) {
      std::size_t n = rng.index(std::min<std::size_t>(3, N), N);
      KPoint p = random_k(rng, n, 4);
      cover.run(
          [&] {
            auto ds = face_decompositions(p);
            if (on_boundary(p) != !ds.empty()) return false;
            for (const auto& d : ds)
              if (!(boundary_insert(d.rho, d.tau, d.face.j) == p)) return false;
            return true;
          },
          [&] { return show(p); });
      if (n < 3) continue;
      special.run(
          [&] {
            auto ds = face_decompositions(p);
            for (std::size_t j = 1; j < n; ++j) {
              bool via = std::any_of(ds.begin(), ds.end(), [&](const KDecomposition& d) { return d.face.j == j; });
              if (via != in_special_face(p, j)) return false;
            }
            return true;
          },
          [&] { return show(p); });
    }
    rep.checks.push_back(cover.result());
    rep.checks.push_back(special.result());
  }

  // The monoid product rho . sigma = d_1(rho)(sigma).
  {
    const std::size_t M = std::min<std::size_t>(N, 6);
    Check assoc_chk("monoid product associative");
    Check left("monoid product left compatibility");
    Check right("monoid product right compatibility");
    for (std::size_t tries = 0; assoc_chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      std::size_t a = rng.index(1, M), b = rng.index(1, M), c = rng.index(1, M);
      if (a + b + c > M + 2) continue;
      KPoint x = random_k(rng, a), y = random_k(rng, b), z = random_k(rng, c);
      assoc_chk.run([&] { return monoid_product(monoid_product(x, y), z) == monoid_product(x, monoid_product(y, z)); },
                    [&] { return show(x) + " " + show(y) + " " + show(z); });
    }
    for (std::size_t tries = 0; left.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      std::size_t r = 0, s = 0, t = 0, k = 0;
      if (!draw_until([&] {
            r = rng.index(1, M), s = rng.index(1, M), t = rng.index(0, M);
            k = rng.index(1, r);
            return r + t + s <= M;
          }))
        continue;
      KPoint rho = random_k(rng, r + 1), sigma = random_k(rng, s), tau = random_k(rng, t + 1);
      auto desc = [&] {
        return "rho=" + show(rho) + " sigma=" + show(sigma) + " tau=" + show(tau) + " k=" + std::to_string(k);
      };
      left.run(
          [&] {
            return monoid_product(boundary_insert(rho, sigma, k + 1), tau) ==
                   boundary_insert(monoid_product(rho, tau), sigma, k + 1);
          },
          desc);
      right.run(
          [&] {
            return monoid_product(tau, boundary_insert(rho, sigma, k + 1)) ==
                   boundary_insert(monoid_product(tau, rho), sigma, k + t + 1);
          },
          desc);
    }
    rep.checks.push_back(assoc_chk.result());
    rep.checks.push_back(left.result());
    rep.checks.push_back(right.result());
  }
  return rep;
}

// ------------------------------------------------------------------- delta

SuiteReport delta_suite(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "delta"));
  const std::size_t N = std::max<std::size_t>(o.n_max, 1);
  SuiteReport rep{"delta", {}};

  const char* names[3] = {"delta relation k < j", "delta relation j <= k < j+t", "delta relation k >= j+t"};
  for (int c = 0; c < 3; ++c) {
    Check chk(names[c]);
    for (std::size_t tries = 0; chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      std::size_t r = 0, t = 0, s = 0, j = 0, k = 0;
      if (!draw_until([&] {
            r = rng.index(1, N), t = rng.index(1, N), s = rng.index(1, N);
            if (r + t + s > N + 2) return false;
            j = rng.index(1, r);
            k = rng.index(1, r + t - 1);
            return c == 0 ? k < j : c == 1 ? (j <= k && k < j + t) : k >= j + t;
          }))
        continue;
      Rat a = pick_a(rng);
      JPoint rho = random_j(rng, r, a);
      KPoint tau = random_k(rng, t), sigma = random_k(rng, s);
      chk.run(
          [&] {
            JPoint lhs = delta_insert(delta_insert(rho, tau, j), sigma, k);
            JPoint rhs = c == 0   ? delta_insert(delta_insert(rho, sigma, k), tau, j + s - 1)
                         : c == 1 ? delta_insert(rho, boundary_insert(tau, sigma, k - j + 1), j)
                                  : delta_insert(delta_insert(rho, sigma, k - t + 1), tau, j);
            return lhs == rhs;
          },
          [&] {
            return "rho=" + show(rho) + " tau=" + show(tau) + " sigma=" + show(sigma) + " j=" + std::to_string(j) +
                   " k=" + std::to_string(k);
          });
    }
    rep.checks.push_back(chk.result());
  }

  {
    Check chk("delta insertion into a graft");
    for (std::size_t tries = 0; chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      if (N < 2) break;
      std::size_t s = rng.index(1, std::max<std::size_t>(1, N - 1));
      std::size_t n = rng.index(2, N);
      if (n + s - 1 > N) continue;
      std::size_t t = rng.index(2, n);
      auto sizes = random_parts(rng, n, t);
      Rat a = pick_a(rng);
      KPoint tau = random_k(rng, t), sigma = random_k(rng, s);
      std::vector<JPoint> rhos;
      for (auto m : sizes) rhos.push_back(random_j(rng, m, a));
      std::size_t k = rng.index(1, n);
      chk.run(
          [&] {
            std::size_t jj = 0, off = 0;
            while (k > off + sizes[jj]) off += sizes[jj++];
            auto moved = rhos;
            moved[jj] = delta_insert(rhos[jj], sigma, k - off);
            return delta_insert(delta_graft(tau, rhos), sigma, k) == delta_graft(tau, moved);
          },
          [&] { return "tau=" + show(tau) + " sigma=" + show(sigma) + " k=" + std::to_string(k); });
    }
    rep.checks.push_back(chk.result());
  }

  {
    Check chk("graft over a boundary insertion");
    for (std::size_t tries = 0; chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      std::size_t t = rng.index(2, std::max<std::size_t>(2, N));
      std::size_t s = rng.index(2, t);
      std::size_t q = t - s + 1;
      std::size_t j = rng.index(1, q);
      if (t > N) continue;
      Rat a = pick_a(rng);
      auto sizes = random_parts(rng, rng.index(t, N < t ? t : N), t);
      KPoint tau = random_k(rng, q), sigma = random_k(rng, s);
      std::vector<JPoint> rhos;
      for (auto m : sizes) rhos.push_back(random_j(rng, m, a));
      chk.run(
          [&] {
            std::vector<JPoint> inner(rhos.begin() + (j - 1), rhos.begin() + (j - 1 + s));
            std::vector<JPoint> outer(rhos.begin(), rhos.begin() + (j - 1));
            outer.push_back(delta_graft(sigma, inner));
            outer.insert(outer.end(), rhos.begin() + (j - 1 + s), rhos.end());
            return delta_graft(boundary_insert(tau, sigma, j), rhos) == delta_graft(tau, outer);
          },
          [&] { return "tau=" + show(tau) + " sigma=" + show(sigma) + " j=" + std::to_string(j); });
    }
    rep.checks.push_back(chk.result());
  }

  {
    Check cover("J boundary covered by faces");
    Check zero("J_0 matches graft decompositions");
    for (std::size_t i = 0; i < o.cases; ++i) {
      static const std::vector<Rat> as{Rat(1, 3), Rat(1, 2), Rat(1)};
      Rat a = rng.pick(as);
      std::size_t n = rng.index(std::min<std::size_t>(2, N), N);
      JPoint p = random_j(rng, n, a, 4);
      cover.run(
          [&] {
            auto ins = j_insert_decompositions(p);
            auto gr = j_graft_decompositions(p);
            if (on_boundary(p) != !(ins.empty() && gr.empty())) return false;
            for (const auto& d : ins)
              if (!(delta_insert(d.rho, d.tau, d.face.j) == p)) return false;
            for (const auto& d : gr)
              if (!(delta_graft(d.tau, d.rhos) == p)) return false;
            return true;
          },
          [&] { return show(p); });
      zero.run([&] { return in_j_zero(p) == !j_graft_decompositions(p).empty(); }, [&] { return show(p); });
    }
    rep.checks.push_back(cover.result());
    rep.checks.push_back(zero.result());
  }

  {
    Check chk("sweep decomposition round trip");
    for (std::size_t i = 0; i < o.cases; ++i) {
      static const std::vector<Rat> bs{Rat(1, 2), Rat(3, 4), Rat(1)};
      static const std::vector<Rat> as{Rat(0), Rat(1, 4), Rat(1, 2)};
      Rat b = rng.pick(bs), a = rng.pick(as);
      if (a > b) continue;
      JPoint p = random_j(rng, rng.index(1, N), b, 4);
      chk.run([&] { return recompose(sweep_decompose(p, a), b) == p; },
              [&] { return show(p) + " over a=" + str(a); });
    }
    rep.checks.push_back(chk.result());
  }
  return rep;
}

// -------------------------------------------------------------- degeneracy

RatVec slice(const RatVec& v, std::size_t b, std::size_t e) { return RatVec(v.begin() + b, v.begin() + e); }

RatVec concat(RatVec a, const RatVec& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Vectors meeting the hypotheses of the block statements; the first block
// of length s has prefix sums at most l-1+a and total at least s-1+a.
RatVec block_below(Rng& rng, std::size_t s, const Rat& a) {
  RatVec blk = random_j_coords(rng, s, a, 4);
  blk.back() -= blk.back() * rat(static_cast<long>(rng.index(0, 4)), 4);
  return blk;
}
RatVec block_above(Rng& rng, std::size_t s, const Rat& a) {
  RatVec blk = random_j_coords(rng, s, a, 4);
  blk.back() += rat(static_cast<long>(rng.index(0, 8)), 4);
  return blk;
}

// A vector whose entries k..k+s-1 form a block of K(s) with raised last
// entry; reports whether xi acts there as the reduced statement predicts.
bool block_inside_holds(Rng& rng, std::size_t s, std::size_t k, RatVec& t) {
  RatVec pre = random_nonneg(rng, k - 1);
  RatVec blk = block_above(rng, s, Rat(0));
  t = concat(concat(pre, blk), random_nonneg(rng, rng.index(0, 3)));
  RatVec tp = xi(t);
  Rat bar = Rat(s) - 1 - sum(blk, 0, s - 1);
  Rat hat = blk.back() - bar;
  RatVec red = concat(concat(pre, RatVec{hat}), slice(t, k + s - 1, t.size()));
  RatVec x = xi(red);
  for (std::size_t l = 1; l < s; ++l)
    if (tp[k + l - 2] != t[k + l - 2]) return false;
  return bar >= 0 && hat >= 0 && slice(x, 0, k - 1) == slice(tp, 0, k - 1) &&
         slice(x, k, x.size()) == slice(tp, k + s - 1, tp.size()) && tp[k + s - 2] == x[k - 1] + bar;
}

void xi_statements(Rng& rng, const VerifyOptions& o, SuiteReport& rep) {
  const std::size_t N = std::max<std::size_t>(o.n_max, 2);
  Check p1("xi bounds"), p2("xi deficit at most one"), p3("xi fixes the tail after deficit one"),
      p4("xi first entry at least one"), p5("xi block below the bound"), p6("xi block above the bound"),
      p7("xi block inside");
  std::vector<RatVec> samples;
  for (std::size_t n = 1; n <= N; ++n) {
    samples.push_back(RatVec(n, Rat(0)));
    RatVec v(n, Rat(0));
    v[0] = 1;
    samples.push_back(v);
    v.back() = 5;
    samples.push_back(v);
    samples.push_back(RatVec(n, Rat(1)));
  }
  for (std::size_t i = 0; i < o.cases; ++i) samples.push_back(random_nonneg(rng, rng.index(1, N)));
  for (const auto& t : samples) {
    RatVec x = xi(t);
    auto d = [&] { return str(t); };
    p1.expect(std::all_of(x.begin(), x.end(), [](const Rat& q) { return q >= 0; }) &&
                  [&] {
                    for (std::size_t k = 0; k < t.size(); ++k)
                      if (x[k] > t[k]) return false;
                    return true;
                  }(),
              d);
    Rat def = 0;
    bool ok2 = true, ok3 = true;
    for (std::size_t k = 0; k < t.size(); ++k) {
      def += t[k] - x[k];
      ok2 = ok2 && def <= 1;
      if (def == 1)
        for (std::size_t l = k + 1; l < t.size(); ++l) ok3 = ok3 && x[l] == t[l];
    }
    p2.expect(ok2, d);
    p3.expect(ok3, d);
    if (t[0] >= 1) p4.expect(t[0] - x[0] == 1, d);
  }

  const std::size_t S = std::min<std::size_t>(N, 6);
  for (std::size_t i = 0; i < o.cases; ++i) {
    Rat a = rat(static_cast<long>(rng.index(0, 4)), 4);
    std::size_t s = rng.index(2, std::max<std::size_t>(2, S));
    RatVec t = concat(block_below(rng, s, a), random_nonneg(rng, rng.index(0, 3)));
    RatVec x = xi(t);
    p5.run(
        [&] {
          if (x[0] != 0) return false;
          for (std::size_t k = 2; k <= s; ++k)
            if (sum(x, 1, k) > Rat(k) - 2 + a) return false;
          return true;
        },
        [&] { return str(t) + " s=" + std::to_string(s) + " a=" + str(a); });

    RatVec u = concat(block_above(rng, s, a), random_nonneg(rng, rng.index(0, 3)));
    RatVec y = xi(u);
    p6.run(
        [&] {
          Rat bar = Rat(s) - 1 + a - sum(u, 0, s - 1);
          Rat hat = u[s - 1] - bar;
          RatVec z = xi(concat(slice(u, 0, s - 1), RatVec{bar}));
          if (sum(u, 0, s) - sum(y, 0, s) != 1 || bar < 0 || hat < 0) return false;
          for (std::size_t l = s; l < u.size(); ++l)
            if (y[l] != u[l]) return false;
          return slice(z, 0, s - 1) == slice(y, 0, s - 1) && y[s - 1] == hat + z.back();
        },
        [&] { return str(u) + " s=" + std::to_string(s) + " a=" + str(a); });
  }
  for (std::size_t i = 0; i < o.cases; ++i) {
    std::size_t s = rng.index(2, std::max<std::size_t>(2, S)), k = rng.index(2, 4);
    RatVec t;
    if (!block_inside_holds(rng, s, k, t))
      p7.expect(false, [&] { return str(t) + " s=" + std::to_string(s) + " k=" + std::to_string(k); });
    else
      p7.expect(true, [] { return std::string(); });
  }
  for (auto* c : {&p1, &p2, &p3, &p4, &p5, &p6, &p7}) rep.checks.push_back(c->result());
}

// Degeneracies of d_k(tau)(rho), one check per case of the table.
void k_boundary_table(Rng& rng, const VerifyOptions& o, std::size_t n_cap, const KDegeneracy& d, const std::string& prefix,
                      SuiteReport& rep) {
  const std::size_t N = std::min(std::max<std::size_t>(o.n_max, 3), n_cap);
  const char* names[5] = {"j < k", "k <= j < k+t", "j >= k+t", "t = 2 at j in {k, k+1}", "r = 2 at an end"};
  for (int b = 0; b < 5; ++b) {
    Check chk(prefix + names[b]);
    for (std::size_t i = 0; i < o.cases; ++i) {
      std::size_t n = 0, r = 0, t = 0, k = 0, j = 0;
      if (o.n_max < 3 ||
          !draw_until([&] {
            n = rng.index(3, N), r = rng.index(2, n - 1), t = n + 1 - r, k = rng.index(1, r), j = rng.index(1, n);
            switch (b) {
              case 0: return j < k && r > 2;
              case 1: return k <= j && j < k + t && t > 2;
              case 2: return k + t <= j && r > 2;
              case 3: return (j == k || j == k + 1) && t == 2;
              default: return r == 2 && ((k == 2 && j == 1) || (k == 1 && j == n));
            }
          }))
        continue;
      KPoint rho = random_k(rng, r), tau = random_k(rng, t);
      chk.run(
          [&] {
            KPoint lhs = d(j, boundary_insert(rho, tau, k));
            switch (b) {
              case 0: return lhs == boundary_insert(d(j, rho), tau, k - 1);
              case 1: return lhs == boundary_insert(rho, d(j - k + 1, tau), k);
              case 2: return lhs == boundary_insert(d(j - t + 1, rho), tau, k);
              case 3: return lhs == rho;
              default: return lhs == tau;
            }
          },
          [&] {
            return "rho=" + show(rho) + " tau=" + show(tau) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
          });
    }
    rep.checks.push_back(chk.result());
  }
}

SuiteReport degeneracy_suite(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "degeneracy"));
  const std::size_t N = std::max<std::size_t>(o.n_max, 2);
  SuiteReport rep{"degeneracy", {}};
  xi_statements(rng, o, rep);

  {
    Check ck("xi maps K(n) into 0 x K(n-1)"), cj("xi maps J(n) into 0 x J(n-1)");
    for (std::size_t i = 0; i < o.cases; ++i) {
      std::size_t n = rng.index(2, N);
      KPoint s = random_k(rng, n);
      ck.run([&] { RatVec x = xi(s.u()); return x[0] == 0 && in_k(slice(x, 1, n)); }, [&] { return show(s); });
      Rat a = pick_a(rng);
      JPoint p = random_j(rng, n, a);
      cj.run([&] { RatVec x = xi(p.v()); return x[0] == 0 && in_j(slice(x, 1, n), a); }, [&] { return show(p); });
    }
    rep.checks.push_back(ck.result());
    rep.checks.push_back(cj.result());
  }

  auto d1 = [](const RatVec& v) { return degenerate(1, v); };

  // xi on boundary points of K.
  {
    const char* names[4] = {"xi on K faces k > 1", "xi on K faces k = 1, t > 2", "xi on K faces k = 2, r = 2",
                            "xi on K faces k = 1, t = 2"};
    for (int b = 0; b < 4; ++b) {
      Check chk(names[b]);
      for (std::size_t i = 0; i < o.cases && o.n_max >= 3; ++i) {
        std::size_t n = 0, r = 0, t = 0, k = 0;
        if (!draw_until([&] {
              n = rng.index(3, N), r = rng.index(2, n - 1), t = n + 1 - r, k = rng.index(1, r);
              return b == 0 ? (k > 1 && r > 2) : b == 1 ? (k == 1 && t > 2) : b == 2 ? (k == 2 && r == 2) : (k == 1 && t == 2);
            }))
          continue;
        KPoint rho = random_k(rng, r), tau = random_k(rng, t);
        chk.run(
            [&] {
              RatVec x = xi(boundary_insert(rho, tau, k).u());
              switch (b) {
                case 0: return x == prepend_zero(boundary_insert(kpt(d1(rho.u())), tau, k - 1).u());
                case 1: return x == prepend_zero(boundary_insert(rho, kpt(d1(tau.u())), 1).u());
                case 2: return x == prepend_zero(tau.u());
                default: return x == prepend_zero(rho.u());
              }
            },
            [&] { return "rho=" + show(rho) + " tau=" + show(tau) + " k=" + std::to_string(k); });
      }
      rep.checks.push_back(chk.result());
    }
  }

  // xi on insertion faces of J.
  {
    const char* names[3] = {"xi on J faces k > 1", "xi on J faces k = 1, t > 2", "xi on J faces k = 1, t = 2"};
    for (int b = 0; b < 3; ++b) {
      Check chk(names[b]);
      for (std::size_t i = 0; i < o.cases; ++i) {
        std::size_t n = 0, r = 0, t = 0, k = 0;
        if (!draw_until([&] {
              n = rng.index(2, N), r = rng.index(1, n - 1), t = n + 1 - r, k = rng.index(1, r);
              return b == 0 ? k > 1 : b == 1 ? (k == 1 && t > 2) : (k == 1 && t == 2);
            }))
          continue;
        Rat a = pick_a(rng);
        JPoint rho = random_j(rng, r, a);
        KPoint tau = random_k(rng, t);
        chk.run(
            [&] {
              RatVec x = xi(delta_insert(rho, tau, k).v());
              switch (b) {
                case 0: return x == prepend_zero(delta_insert(JPoint(d1(rho.v()), a), tau, k - 1).v());
                case 1: return x == prepend_zero(delta_insert(rho, kpt(d1(tau.u())), 1).v());
                default: return x == prepend_zero(rho.v());
              }
            },
            [&] { return "rho=" + show(rho) + " tau=" + show(tau) + " k=" + std::to_string(k); });
      }
      rep.checks.push_back(chk.result());
    }
  }

  k_boundary_table(rng, o, 64, d_k, "K degeneracy on faces ", rep);

  // Degeneracies of delta_k(tau)(rho).
  {
    const char* names[4] = {"J degeneracy on insertions j < k", "J degeneracy on insertions k <= j < k+t",
                            "J degeneracy on insertions j >= k+t", "J degeneracy on insertions t = 2 at j in {k, k+1}"};
    for (int b = 0; b < 4; ++b) {
      Check chk(names[b]);
      for (std::size_t i = 0; i < o.cases; ++i) {
        std::size_t n = 0, r = 0, t = 0, k = 0, j = 0;
        if (!draw_until([&] {
              n = rng.index(2, N), r = rng.index(1, n - 1), t = n + 1 - r, k = rng.index(1, r), j = rng.index(1, n);
              switch (b) {
                case 0: return j < k;
                case 1: return k <= j && j < k + t && t > 2;
                case 2: return k + t <= j;
                default: return (j == k || j == k + 1) && t == 2;
              }
            }))
          continue;
        Rat a = pick_a(rng);
        JPoint rho = random_j(rng, r, a);
        KPoint tau = random_k(rng, t);
        chk.run(
            [&] {
              JPoint lhs = d_j(j, delta_insert(rho, tau, k));
              switch (b) {
                case 0: return lhs == delta_insert(d_j(j, rho), tau, k - 1);
                case 1: return lhs == delta_insert(rho, d_k(j - k + 1, tau), k);
                case 2: return lhs == delta_insert(d_j(j - t + 1, rho), tau, k);
                default: return lhs == rho;
              }
            },
            [&] {
              return "rho=" + show(rho) + " tau=" + show(tau) + " k=" + std::to_string(k) + " j=" + std::to_string(j);
            });
      }
      rep.checks.push_back(chk.result());
    }
  }

  // Degeneracies of delta(tau; rho_1..rho_t).
  {
    const char* names[4] = {"J degeneracy on grafts inside a block", "J degeneracy on grafts at a unit block",
                            "J degeneracy on grafts t = 2, first block unit", "J degeneracy on grafts t = 2, second block unit"};
    for (int b = 0; b < 4; ++b) {
      Check chk(names[b]);
      for (std::size_t i = 0; i < o.cases; ++i) {
        std::size_t n = 0, t = 0, j = 0, blk = 0, off = 0;
        std::vector<std::size_t> sizes;
        if (!draw_until([&] {
              n = rng.index(2, N), t = rng.index(2, n), j = rng.index(1, n);
              sizes = random_parts(rng, n, t);
              blk = 0, off = 0;
              while (j > off + sizes[blk]) off += sizes[blk++];
              switch (b) {
                case 0: return sizes[blk] > 1;
                case 1: return sizes[blk] == 1 && t > 2;
                case 2: return sizes[blk] == 1 && t == 2 && blk == 0;
                default: return sizes[blk] == 1 && t == 2 && blk == 1;
              }
            }))
          continue;
        Rat a = pick_a(rng);
        KPoint tau = random_k(rng, t);
        std::vector<JPoint> rhos;
        for (auto m : sizes) rhos.push_back(random_j(rng, m, a));
        chk.run(
            [&] {
              JPoint lhs = d_j(j, delta_graft(tau, rhos));
              auto rest = rhos;
              switch (b) {
                case 0:
                  rest[blk] = d_j(j - off, rhos[blk]);
                  return lhs == delta_graft(tau, rest);
                case 1:
                  rest.erase(rest.begin() + static_cast<long>(blk));
                  return lhs == delta_graft(d_k(blk + 1, tau), rest);
                case 2: return lhs == rhos[1];
                default: return lhs == rhos[0];
              }
            },
            [&] { return "tau=" + show(tau) + " j=" + std::to_string(j) + " a=" + str(a); });
      }
      rep.checks.push_back(chk.result());
    }
  }

  {
    Check ck("simplicial identity on K"), cj("simplicial identity on J");
    for (std::size_t i = 0; i < o.cases && o.n_max >= 3; ++i) {
      std::size_t n = rng.index(3, N), b = rng.index(1, n - 1), a = rng.index(b, n - 1);
      KPoint s = random_k(rng, n);
      ck.run([&] { return d_k(a, d_k(b, s)) == d_k(b, d_k(a + 1, s)); },
             [&] { return show(s) + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
      JPoint p = random_j(rng, n, pick_a(rng));
      cj.run([&] { return d_j(a, d_j(b, p)) == d_j(b, d_j(a + 1, p)); },
             [&] { return show(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b); });
    }
    rep.checks.push_back(ck.result());
    rep.checks.push_back(cj.result());
  }

  {
    Check ck("K degeneracy affine towards beta"), cj("J degeneracy affine towards beta");
    for (std::size_t i = 0; i < o.cases; ++i) {
      std::size_t n = rng.index(2, N), j = rng.index(1, n);
      Rat t = rng.grid(Rat(0), Rat(1), 6);
      KPoint s = random_k(rng, n);
      KPoint bk(beta(Rat(0), n).v()), bk1(beta(Rat(0), n - 1).v());
      ck.run([&] { return d_k(j, KPoint(affine(t, bk.u(), s.u()))).u() == affine(t, bk1.u(), d_k(j, s).u()); },
             [&] { return show(s) + " j=" + std::to_string(j) + " t=" + str(t); });
      if (j == 1) continue;
      Rat a = pick_a(rng);
      JPoint p = random_j(rng, n, a);
      JPoint bj = beta(a, n), bj1 = beta(a, n - 1);
      cj.run([&] { return d_j(j, JPoint(affine(t, bj.v(), p.v()), a)).v() == affine(t, bj1.v(), d_j(j, p).v()); },
             [&] { return show(p) + " j=" + std::to_string(j) + " t=" + str(t); });
    }
    rep.checks.push_back(ck.result());
    rep.checks.push_back(cj.result());
  }

  {
    static const std::vector<Rat> us{Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)};
    Rat u = rng.pick(us);
    KDegeneracy mixd = [u](std::size_t j, const KPoint& s) { return interpolate_degeneracy(u, d_k, d_s, j, s); };
    VerifyOptions small = o;
    small.cases = std::max<std::size_t>(1, o.cases / 4);
    k_boundary_table(rng, small, 5, mixd, "interpolated degeneracy on faces ", rep);
  }
  return rep;
}

// ------------------------------------------------------------------- omega

// A random formal expression evaluating at parameter a in J^a(n).
FormalJExprPtr random_expr(Rng& rng, const Rat& a, std::size_t n, int depth) {
  int kind = depth <= 0 || n < 2 ? 0 : static_cast<int>(rng.index(0, 3));
  if (kind == 1) {
    std::size_t r = rng.index(1, n - 1), t = n + 1 - r;
    return make_delta_j(rng.index(1, r), random_expr(rng, a, r, depth - 1), random_k(rng, t));
  }
  if (kind == 2) {
    std::size_t t = rng.index(2, n);
    std::vector<FormalJExprPtr> rhos;
    for (auto m : random_parts(rng, n, t)) rhos.push_back(random_expr(rng, a, m, depth - 1));
    return make_delta_graft(random_k(rng, t), std::move(rhos));
  }
  if (kind == 3) {
    Rat inner = a * rat(static_cast<long>(rng.index(0, 3)), 4);
    Rat outer = (a - inner) / (1 - inner);
    std::size_t t = rng.index(2, n);
    std::vector<FormalJExprPtr> rhos;
    for (auto m : random_parts(rng, n, t)) rhos.push_back(random_expr(rng, inner, m, depth - 1));
    return make_delta_rel(random_expr(rng, outer, t, depth - 1), std::move(rhos));
  }
  return make_base(random_j(rng, n, a, 4));
}

SuiteReport omega_suite(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "omega"));
  const std::size_t N = std::max<std::size_t>(o.n_max, 2);
  SuiteReport rep{"omega", {}};
  static const std::vector<Rat> as{Rat(1, 3), Rat(1, 2), Rat(1)};

  Check lands("omega lands in J_0"), ident("omega at a = 0 is the identity"), faces("omega on boundary insertions"),
      welldef("omega well defined"), ds_def("Stasheff degeneracy well defined"), alpha_fix("Stasheff degeneracy fixes alpha"),
      inj("omega injective on lattice vertices"), deg("omega intertwines degeneracies"),
      deg1("omega at a = 1 intertwines degeneracies");
  for (std::size_t i = 0; i < o.cases; ++i) {
    Rat a = rng.pick(as);
    std::size_t n = rng.index(2, N);
    KPoint s = random_k(rng, n, 4);
    auto d = [&] { return show(s) + " a=" + str(a); };
    lands.run([&] { return in_j_zero(omega(a, s)); }, d);
    ident.run([&] { return omega(Rat(0), s).v() == s.u(); }, d);
    welldef.run(
        [&] {
          auto vs = omega_values(a, s);
          return std::all_of(vs.begin(), vs.end(), [&](const JPoint& v) { return v == vs.front(); });
        },
        d);
    std::size_t j = rng.index(1, n);
    ds_def.run(
        [&] {
          auto vs = d_s_values(j, s);
          return std::all_of(vs.begin(), vs.end(), [&](const KPoint& v) { return v == vs.front(); });
        },
        [&] { return show(s) + " j=" + std::to_string(j); });
    if (n >= 3) alpha_fix.run([&] { return d_s(j, alpha(Rat(1), n)) == alpha(Rat(1), n - 1); }, [&] { return std::to_string(n); });
    if (j >= 2)
      deg.run([&] { return d_j(j, omega(a, s)) == omega(a, d_s(j, s)); },
              [&] { return show(s) + " a=" + str(a) + " j=" + std::to_string(j); });
    deg1.run([&] { return d_k(j + 1, embed_in_k(omega(Rat(1), s))) == embed_in_k(omega(Rat(1), d_s(j, s))); },
             [&] { return show(s) + " j=" + std::to_string(j); });

    std::size_t r = 0, t = 0;
    if (n >= 3) {
      r = rng.index(2, n - 1), t = n + 1 - r;
      std::size_t k = rng.index(1, r);
      KPoint rho = random_k(rng, r), tau = random_k(rng, t);
      faces.run([&] { return omega(a, boundary_insert(rho, tau, k)) == delta_insert(omega(a, rho), tau, k); },
                [&] { return "rho=" + show(rho) + " tau=" + show(tau) + " k=" + std::to_string(k) + " a=" + str(a); });
    }
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(N, 5); ++n) {
    for (const Rat& a : as) {
      inj.run(
          [&] {
            std::set<JPoint> seen;
            for (const auto& v : k_vertices(n)) {
              JPoint w = omega(a, v);
              if (!in_j_zero(w) || !seen.insert(w).second) return false;
            }
            return true;
          },
          [&] { return "n=" + std::to_string(n) + " a=" + str(a); });
    }
  }
  // Points on two facets at once: lattice vertices and iterated insertions
  // over every shape.
  Check meet("omega well defined on face intersections");
  for (std::size_t n = 3; n <= std::min<std::size_t>(N, 5); ++n) {
    auto kv = k_vertices(n);
    std::vector<KPoint> pts(kv.begin(), kv.end());
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t t = 2; r + t <= n + 1; ++t) {
        std::size_t s = n + 2 - r - t;
        if (s < 2) continue;
        for (std::size_t j = 1; j <= r; ++j)
          for (std::size_t k = 1; k <= r + t - 1; ++k) {
            KPoint rho = random_k(rng, r), tau = random_k(rng, t), sigma = random_k(rng, s);
            pts.push_back(boundary_insert(boundary_insert(rho, tau, j), sigma, k));
          }
      }
    for (const auto& p : pts)
      for (const Rat& a : as)
        meet.run(
            [&] {
              auto vs = omega_values(a, p);
              return std::all_of(vs.begin(), vs.end(), [&](const JPoint& v) { return v == vs.front(); });
            },
            [&] { return show(p) + " a=" + str(a); });
  }
  for (auto* c : {&lands, &ident, &faces, &welldef, &meet, &ds_def, &alpha_fix, &inj, &deg, &deg1}) rep.checks.push_back(c->result());

  // Rescaling and the projection onto K.
  static const std::vector<Rat> below{Rat(1, 3), Rat(1, 2), Rat(2, 3)};
  Check pins("projection on insertions"), pbeta("projection of beta grafts"), pdeg("projection commutes with degeneracies"),
      rdef("rescale well defined"), rins("rescale on insertions"), rgraft("rescale on grafts"),
      rdeg("rescale commutes with degeneracies"), fev("formal rescale matches pointwise rescale"),
      ffun("formal rescale functorial");
  for (std::size_t i = 0; i < o.cases; ++i) {
    Rat a = rng.pick(below);
    Rat b = rng.pick(std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(1)});
    std::size_t n = rng.index(2, N);
    JPoint p = random_j(rng, n, a, 4);
    rdef.run(
        [&] {
          auto vs = rescale_values(b / a, p);
          return std::all_of(vs.begin(), vs.end(), [&](const JPoint& v) { return v == vs.front(); });
        },
        [&] { return show(p) + " to " + str(b); });
    std::size_t k = rng.index(1, n);
    pdeg.run([&] { return d_k(k, pi_geometric(p)) == pi_geometric(d_j(k, p)); },
             [&] { return show(p) + " k=" + std::to_string(k); });
    rdeg.run([&] { return d_j(k, rescale(b / a, p)) == rescale(b / a, d_j(k, p)); },
             [&] { return show(p) + " k=" + std::to_string(k) + " to " + str(b); });

    std::size_t r = rng.index(1, n - 1), s = n + 1 - r, kk = rng.index(1, r);
    JPoint rho = random_j(rng, r, a, 4);
    KPoint sigma = random_k(rng, s);
    auto dins = [&] { return "rho=" + show(rho) + " sigma=" + show(sigma) + " k=" + std::to_string(kk); };
    pins.run([&] { return pi_geometric(delta_insert(rho, sigma, kk)) == boundary_insert(pi_geometric(rho), sigma, kk); },
             dins);
    rins.run([&] { return rescale(b / a, delta_insert(rho, sigma, kk)) == delta_insert(rescale(b / a, rho), sigma, kk); },
             dins);

    std::size_t t = rng.index(2, n);
    KPoint tau = random_k(rng, t);
    pbeta.run([&] { return pi_geometric(delta_graft(tau, std::vector<JPoint>(t, beta(a, 1)))) == tau; },
              [&] { return show(tau) + " a=" + str(a); });
    std::vector<JPoint> rhos;
    for (auto m : random_parts(rng, n, t)) rhos.push_back(random_j(rng, m, a, 4));
    rgraft.run(
        [&] {
          std::vector<JPoint> moved;
          for (const auto& x : rhos) moved.push_back(rescale(b / a, x));
          return rescale(b / a, delta_graft(tau, rhos)) == delta_graft(tau, moved);
        },
        [&] { return "tau=" + show(tau) + " a=" + str(a) + " to " + str(b); });

    FormalJExprPtr e = random_expr(rng, a, n, 2);
    fev.run([&] { return evaluate(*f_ab(a, b, e)) == rescale(b / a, evaluate(*e)); },
            [&] { return show(evaluate(*e)) + " to " + str(b); });
    Rat c = rng.pick(std::vector<Rat>{Rat(0), Rat(1, 4), Rat(3, 4), Rat(1)});
    if (b > 0 && b < 1)
      ffun.run([&] { return evaluate(*f_ab(b, c, f_ab(a, b, e))) == evaluate(*f_ab(a, c, e)); },
               [&] { return show(evaluate(*e)) + " via " + str(b) + " to " + str(c); });
  }
  for (auto* c : {&pins, &pbeta, &pdeg, &rdef, &rins, &rgraft, &rdeg, &fev, &ffun}) rep.checks.push_back(c->result());
  return rep;
}

// ------------------------------------------------------------------ operad

std::vector<KPoint> random_k_tuple(Rng& rng, std::size_t m, std::size_t n) {
  std::vector<KPoint> out;
  for (auto s : random_parts(rng, n + 2, m + 2)) out.push_back(random_k(rng, s));
  return out;
}

DegIndexList random_subset(Rng& rng, std::size_t m) {
  DegIndexList d;
  for (std::size_t i = 1; i <= m; ++i)
    if (rng.chance(1, 2)) d.push_back(i);
  return d;
}

// A random unital morphism s -> t, or nothing when the hom-set is empty.
std::optional<UnitalMorphism> random_unital(Rng& rng, Obj s, Obj t, const Rat& a, bool with_deg) {
  if (s.primed && !t.primed) return std::nullopt;
  std::size_t lo = s.n > t.n ? s.n - t.n : 0;
  if (!with_deg && lo > 0) return std::nullopt;
  std::size_t k = with_deg ? rng.index(lo, s.n) : 0;
  std::vector<std::size_t> pos;
  for (std::size_t i = 1; i <= s.n; ++i) pos.push_back(i);
  std::shuffle(pos.begin(), pos.end(), rng.engine());
  DegIndexList d(pos.begin(), pos.begin() + static_cast<long>(k));
  std::sort(d.begin(), d.end());
  std::size_t m = s.n - k;
  UnitalMorphism u;
  u.deg = d;
  if (!s.primed && t.primed) {
    std::vector<JPoint> rho;
    for (auto sz : random_parts(rng, t.n + 2, m + 2)) rho.push_back(random_j(rng, sz, a));
    u.tuple = make_j_morphism(std::move(rho));
  } else {
    u.tuple = make_k_morphism(random_k_tuple(rng, m, t.n));
    u.primed_source = s.primed;
  }
  return u;
}

RepElement random_element(Rng& rng, Rep rep, Obj s, const Rat& a) {
  const std::size_t n = s.n + 2;
  if (rep == Rep::J0Bar) {
    std::size_t t = rng.index(2, n);
    std::vector<JPoint> rhos;
    for (auto m : random_parts(rng, n, t)) rhos.push_back(random_j(rng, m, a));
    return delta_graft(random_k(rng, t), rhos);
  }
  if (rep == Rep::J0Breve || s.primed) return random_j(rng, n, a);
  return random_k(rng, n);
}

const char* rep_name(Rep r) {
  switch (r) {
    case Rep::KBar: return "K bar";
    case Rep::J0Bar: return "J_0 bar";
    case Rep::JBar: return "J bar";
    case Rep::KBreve: return "K breve";
    case Rep::J0Breve: return "J_0 breve";
    default: return "J breve";
  }
}

std::string show_elem(const RepElement& x) {
  return std::visit([](const auto& p) { return show(p); }, x);
}

DegIndexList deletion_oracle(const DegIndexList& outer, const DegIndexList& inner, std::size_t m) {
  std::vector<std::size_t> alive;
  for (std::size_t i = 1; i <= m; ++i)
    if (!std::binary_search(inner.begin(), inner.end(), i)) alive.push_back(i);
  std::set<std::size_t> gone(inner.begin(), inner.end());
  for (auto i : outer) gone.insert(alive[i - 1]);
  return DegIndexList(gone.begin(), gone.end());
}

SuiteReport operad_suite(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "operad"));
  const std::size_t N = std::min<std::size_t>(std::max<std::size_t>(o.n_max, 1), 4);
  SuiteReport rep{"operad", {}};
  static const std::vector<Rat> as{Rat(1, 3), Rat(1, 2), Rat(1)};

  auto random_obj = [&](bool primes) { return Obj{rng.index(0, N), primes && rng.chance(1, 2)}; };
  // Without degeneracies the arities along a chain cannot drop.
  auto chain = [&](bool primes, bool monotone) {
    std::vector<Obj> objs{random_obj(primes), random_obj(primes), random_obj(primes), random_obj(primes)};
    std::sort(objs.begin(), objs.end(), [monotone](const Obj& x, const Obj& y) {
      return x.primed < y.primed || (monotone && x.primed == y.primed && x.n < y.n);
    });
    return objs;
  };

  {
    Check chk("composition associative");
    for (std::size_t tries = 0; chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      Rat a = rng.pick(as);
      auto objs = chain(true, false);
      auto f = random_unital(rng, objs[0], objs[1], a, true), g = random_unital(rng, objs[1], objs[2], a, true),
           h = random_unital(rng, objs[2], objs[3], a, true);
      if (!f || !g || !h) continue;
      chk.run([&] { return compose(*h, compose(*g, *f)) == compose(compose(*h, *g), *f); },
              [&] {
                return "objects " + std::to_string(objs[0].n) + (objs[0].primed ? "'" : "") + " .. " +
                       std::to_string(objs[3].n) + (objs[3].primed ? "'" : "");
              });
    }
    rep.checks.push_back(chk.result());
  }

  for (Rep r : {Rep::KBar, Rep::J0Bar, Rep::JBar, Rep::KBreve, Rep::J0Breve, Rep::JBreve}) {
    const bool deg = r == Rep::KBreve || r == Rep::J0Breve || r == Rep::JBreve;
    const bool primes = r == Rep::JBar || r == Rep::JBreve;
    Check chk(std::string("functoriality of ") + rep_name(r));
    for (std::size_t tries = 0; chk.result().cases < o.cases && tries < 16 * o.cases; ++tries) {
      Rat a = rng.pick(as);
      auto objs = chain(primes, !deg);
      auto f = random_unital(rng, objs[0], objs[1], a, deg), g = random_unital(rng, objs[1], objs[2], a, deg),
           h = random_unital(rng, objs[2], objs[3], a, deg);
      if (!f || !g || !h) continue;
      RepElement x = random_element(rng, r, objs[0], a);
      chk.run(
          [&] {
            RepElement lhs = rep_apply(r, compose(*h, compose(*g, *f)), x);
            RepElement rhs = rep_apply(r, *h, rep_apply(r, *g, rep_apply(r, *f, x)));
            return lhs == rhs;
          },
          [&] { return show_elem(x); });
    }
    rep.checks.push_back(chk.result());
  }

  {
    Check oracle("degeneracy composition deletes positions"), acts("degeneracy composition acts");
    for (std::size_t i = 0; i < o.cases; ++i) {
      std::size_t m = rng.index(0, N + 2);
      DegIndexList di = random_subset(rng, m);
      DegIndexList dout = random_subset(rng, m - di.size());
      auto d = [&] { return "m=" + std::to_string(m) + " sizes " + std::to_string(dout.size()) + "," + std::to_string(di.size()); };
      oracle.run([&] { return compose_deg(dout, di) == deletion_oracle(dout, di, m); }, d);
      KPoint x = random_k(rng, m + 2);
      acts.run([&] { return apply_deg(compose_deg(dout, di), x) == apply_deg(dout, apply_deg(di, x)); }, d);
    }
    rep.checks.push_back(oracle.result());
    rep.checks.push_back(acts.result());
  }
  return rep;
}

// --------------------------------------------------------------------- bar

long long ipow(long long b, std::size_t e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

BarPoint random_bar_point(Rng& rng, const BarContext& ctx, std::size_t r) {
  const int m = ctx.monoid().size();
  auto label = [&] { return static_cast<int>(rng.index(0, static_cast<std::size_t>(m - 1))); };
  BarCell c;
  if (ctx.ends().left) c.y = label();
  for (std::size_t i = 0; i < r; ++i) c.x.push_back(label());
  if (ctx.ends().right) c.z = label();
  return BarPoint{random_k(rng, r + 2, 4), c};
}

// Every cell of rank r with arbitrary labels, units included.
std::vector<BarCell> all_cells(const BarContext& ctx, std::size_t r) {
  const int m = ctx.monoid().size();
  const std::size_t slots = r + (ctx.ends().left ? 1 : 0) + (ctx.ends().right ? 1 : 0);
  std::vector<BarCell> out;
  std::vector<int> w(slots, 0);
  while (true) {
    BarCell c;
    std::size_t i = 0;
    if (ctx.ends().left) c.y = w[i++];
    while (c.x.size() < r) c.x.push_back(w[i++]);
    if (ctx.ends().right) c.z = w[i++];
    out.push_back(c);
    std::size_t k = 0;
    while (k < slots && ++w[k] == m) w[k++] = 0;
    if (k == slots) break;
  }
  return out;
}

SuiteReport bar_suite(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "bar"));
  const std::size_t N = std::min<std::size_t>(std::max<std::size_t>(o.n_max, 1), 4);
  SuiteReport rep{"bar", {}};
  const std::vector<std::string> monoids{"c2", "c3", "triv"};

  Check counts("cell counts"), chi("Euler characteristic of P^n over C2"), filt("projective filtration counts");
  for (const auto& name : monoids) {
    FiniteMonoid x = FiniteMonoid::builtin(name);
    const long long q = x.size();
    for (auto model : {BarModel::Strict, BarModel::Hopf}) {
      const long long inner = model == BarModel::Strict ? q - 1 : q;
      for (const char* e : {"*x*", "xx*", "*xx", "yxz"}) {
        BarContext ctx(x, parse_ends(e), model);
        BarComplex bc = build_bar(ctx, N);
        counts.run(
            [&] {
              for (std::size_t r = 0; r <= N; ++r) {
                long long want = ipow(inner, r) * (ctx.ends().left ? q : 1) * (ctx.ends().right ? q : 1);
                if (static_cast<long long>(bc.count(r)) != want) return false;
              }
              return true;
            },
            [&] { return name + " " + e; });
        if (name == "c2" && model == BarModel::Strict && std::string(e) == "*x*")
          chi.run([&] { return euler(bc) == (N % 2 == 0 ? 1 : 0); }, [&] { return std::to_string(euler(bc)); });
      }
      ProjectiveFiltration pf = projective_filtration(x, N, model);
      filt.run(
          [&] {
            for (std::size_t r = 0; r <= N; ++r) {
              if (static_cast<long long>(pf.p.count(r)) != ipow(inner, r)) return false;
              if (static_cast<long long>(pf.e.count(r)) != q * ipow(inner, r)) return false;
            }
            return static_cast<long long>(pf.d_top.size()) == ipow(inner, N);
          },
          [&] { return name; });
    }
  }
  for (auto* c : {&counts, &chi, &filt}) rep.checks.push_back(c->result());

  Check conf("normal forms confluent"), normal("normal forms are normal"), attach("attachments glue consistently");
  for (auto model : {BarModel::Strict, BarModel::Hopf}) {
    BarContext ctx(FiniteMonoid::builtin("c2"), parse_ends("yxz"), model);
    for (std::size_t r = 0; r <= std::min<std::size_t>(N, 3); ++r) {
      auto kv = k_vertices(r + 2);
      std::vector<KPoint> pts(kv.begin(), kv.end());
      for (int i = 0; i < 3; ++i) pts.push_back(random_k(rng, r + 2, 4));
      for (const auto& c : all_cells(ctx, r))
        for (const auto& s : pts) {
          BarPoint p{s, c};
          auto d = [&] { return show(s) + " rank " + std::to_string(r); };
          conf.run([&] { auto all = ctx.normal_forms_all_orders(p); return all.size() == 1 && *all.begin() == ctx.normal_form(p); }, d);
          normal.run([&] { BarPoint q = ctx.normal_form(p); return ctx.is_normal_cell(q.cell) && !on_boundary(q.sigma); }, d);
        }
    }
  }
  for (std::size_t i = 0; i < o.cases; ++i) {
    BarContext ctx(FiniteMonoid::builtin(rng.pick(monoids)), parse_ends(rng.pick(std::vector<std::string>{"*x*", "xx*", "yxz"})),
                   rng.chance(1, 2) ? BarModel::Strict : BarModel::Hopf);
    BarPoint p = random_bar_point(rng, ctx, rng.index(0, std::min<std::size_t>(N, 3)));
    conf.run([&] { auto all = ctx.normal_forms_all_orders(p); return all.size() == 1 && *all.begin() == ctx.normal_form(p); },
             [&] { return show(p.sigma); });
  }
  for (const auto& name : {"c2", "c3"}) {
    for (auto model : {BarModel::Strict, BarModel::Hopf}) {
      BarContext ctx(FiniteMonoid::builtin(name), parse_ends("yxz"), model);
      BarComplex bc = build_bar(ctx, std::min<std::size_t>(N, 3));
      for (const auto& at : bc.attachments) {
        KPoint rho = random_k(rng, at.face.r), tau = random_k(rng, at.face.t);
        const BarCell& cell = bc.cells[at.rank][at.index];
        attach.run(
            [&] {
              BarPoint lhs = ctx.normal_form(BarPoint{boundary_insert(rho, tau, at.face.j), cell});
              BarPoint rhs = ctx.normal_form(BarPoint{apply_deg(at.collapse, rho), at.target});
              return lhs == rhs;
            },
            [&] { return std::string(name) + " rho=" + show(rho) + " tau=" + show(tau); });
      }
    }
  }
  for (auto* c : {&conf, &normal, &attach}) rep.checks.push_back(c->result());

  Check proj("projection to P^n natural"), induced("induced map C2 to triv"), primed("primed model"),
      reject("monoid tables validated");
  {
    FiniteMonoid c2 = FiniteMonoid::builtin("c2"), triv = FiniteMonoid::builtin("triv");
    BarContext e(c2, parse_ends("xx*"), BarModel::Strict), p(c2, parse_ends("*x*"), BarModel::Strict),
        t(triv, parse_ends("*x*"), BarModel::Strict);
    const std::vector<int> f{0, 0};
    for (std::size_t i = 0; i < o.cases; ++i) {
      BarPoint x = random_bar_point(rng, e, rng.index(0, N));
      proj.run([&] { return forget_left(e.normal_form(x)) == p.normal_form(forget_left(x)); }, [&] { return show(x.sigma); });
      BarPoint y = random_bar_point(rng, p, rng.index(0, N));
      induced.run([&] { return t.normal_form(map_labels(p.normal_form(y), f)) == t.normal_form(map_labels(y, f)); },
                  [&] { return show(y.sigma); });
      primed.run(
          [&] {
            PrimedPoint q = primed_point(x);
            return q.cell == x.cell && q.rho == omega(Rat(1, 2), x.sigma);
          },
          [&] { return show(x.sigma); });
    }
    BarComplex bc = build_bar(p, N);
    primed.run([&] { BarComplex pm = primed_model(bc); return pm.primed && pm.cells == bc.cells; }, [] { return std::string("cells"); });
  }
  auto throws = [](auto&& fn) {
    try {
      fn();
    } catch (const MonoidError&) {
      return true;
    }
    return false;
  };
  reject.run([&] { return throws([] { FiniteMonoid({"e", "g"}, {{0, 1}, {1, 1}}); }) == false; },
             [] { return std::string("semilattice rejected"); });
  reject.run([&] { return throws([] { FiniteMonoid({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}); }); },
             [] { return std::string("non-associative table accepted"); });
  reject.run([&] { return throws([] { FiniteMonoid({"a", "b"}, {{1, 1}, {1, 1}}); }); },
             [] { return std::string("table without unit accepted"); });
  for (auto* c : {&proj, &induced, &primed, &reject}) rep.checks.push_back(c->result());
  return rep;
}

// ------------------------------------------------------------------- trees

SuiteReport trees_suite(const VerifyOptions& o) {
  const std::size_t N = std::max<std::size_t>(o.n_max, 1);
  SuiteReport rep{"trees", {}};
  Check cat("trivalent counts"), words("word round trips"), bcount("bearded counts"), bwords("bearded word round trips"),
      vsum("bearded coordinates in J(n)"), klat("lattice points in K(n)"), dual("dual shadows reverse"),
      bad("malformed words rejected");
  for (std::size_t n = 1; n <= std::min(N, kMaxTrivalentLeaves); ++n) {
    auto ts = enum_trivalent(n);
    cat.expect(ts.size() == catalan(n - 1), [&] { return "n=" + std::to_string(n); });
    if (n > 9) continue;
    for (const auto& t : ts) {
      words.run([&] { return parse_word(word(t)) == t && parse_word_primed(word_primed(t)) == t; }, [&] { return word(t); });
    }
    klat.run(
        [&] {
          std::set<RatVec> lat = k_lattice(n);
          for (const auto& v : lat)
            if (!in_k(v)) return false;
          std::set<KPoint> kv = k_vertices(n);
          return lat.size() == ts.size() && kv.size() == lat.size();
        },
        [&] { return "n=" + std::to_string(n); });
    dual.run(
        [&] {
          std::set<RatVec> rev;
          for (const auto& v : k_lattice(n)) rev.insert(reversed(v));
          return rev == k_lattice_dual(n);
        },
        [&] { return "n=" + std::to_string(n); });
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(N, 7); ++n) {
    auto bs = enum_bearded(n);
    bcount.expect(bs.size() == count_bearded(n), [&] { return "n=" + std::to_string(n); });
    for (const auto& b : bs) {
      if (n <= 6)
        bwords.run(
            [&] {
              for (bool u : {false, true})
                if (!(parse_bearded(bearded_word(b, u)) == b) || !(parse_bearded_primed(bearded_word_primed(b, u)) == b))
                  return false;
              return true;
            },
            [&] { return bearded_word(b); });
      vsum.run([&] { return in_j(v_coords(b), Rat(1, 2)) && in_j(v_coords(b, Rat(1, 3)), Rat(1, 3)); },
               [&] { return bearded_word(b); });
    }
  }
  for (const char* w : {"", "x1@", "x1x2", "x2x1@", "x1x2@@", "x1x3@", "@x1", "x1x2#", "x1nx2n#"}) {
    bad.run(
        [&] {
          try {
            parse_word(w);
          } catch (const ParseError&) {
            return true;
          }
          return false;
        },
        [&] { return std::string("accepted \"") + w + "\""; });
  }
  for (const char* w : {"", "x1", "x1x2@", "x1nx2#", "x1nx2nb#", "x1nn"}) {
    bad.run(
        [&] {
          try {
            parse_bearded(w);
          } catch (const ParseError&) {
            return true;
          }
          return false;
        },
        [&] { return std::string("accepted bearded \"") + w + "\""; });
  }
  for (auto* c : {&cat, &words, &bcount, &bwords, &vsum, &klat, &dual, &bad}) rep.checks.push_back(c->result());
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"boundary", "delta", "degeneracy", "omega", "operad", "bar", "trees"};
  return names;
}

SuiteReport verify_boundary(const VerifyOptions& o) { return boundary_suite(o); }
SuiteReport verify_delta(const VerifyOptions& o) { return delta_suite(o); }
SuiteReport verify_degeneracy(const VerifyOptions& o) { return degeneracy_suite(o); }
SuiteReport verify_omega(const VerifyOptions& o) { return omega_suite(o); }
SuiteReport verify_operad(const VerifyOptions& o) { return operad_suite(o); }
SuiteReport verify_bar(const VerifyOptions& o) { return bar_suite(o); }
SuiteReport verify_trees(const VerifyOptions& o) { return trees_suite(o); }

CheckResult xi_block_statement_at_start(const VerifyOptions& o) {
  Rng rng(mix(o.seed, "xi-start"));
  Check chk("xi block inside at k = 1");
  const std::size_t S = std::min<std::size_t>(std::max<std::size_t>(o.n_max, 2), 6);
  for (std::size_t i = 0; i < o.cases; ++i) {
    std::size_t s = rng.index(2, S);
    RatVec t;
    bool ok = block_inside_holds(rng, s, 1, t);
    chk.expect(ok, [&] { return str(t) + " s=" + std::to_string(s); });
  }
  return chk.result();
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& o) {
  static const std::map<std::string, SuiteReport (*)(const VerifyOptions&)> table{
      {"boundary", verify_boundary}, {"delta", verify_delta}, {"degeneracy", verify_degeneracy}, {"omega", verify_omega},
      {"operad", verify_operad},     {"bar", verify_bar},     {"trees", verify_trees}};
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(table.at(s)(o));
    return out;
  }
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown suite '" + name + "'");
  out.push_back(it->second(o));
  return out;
}

std::string format_report(const std::vector<SuiteReport>& reports, const VerifyOptions& o) {
  std::ostringstream os;
  os << "verify seed=" << o.seed << " n-max=" << o.n_max << " cases=" << o.cases << "\n";
  std::size_t bad = 0;
  for (const auto& r : reports) {
    os << "[" << r.suite << "]\n";
    for (const auto& c : r.checks) {
      os << "  " << (c.ok() ? "ok  " : "FAIL") << " " << c.name << " (" << c.cases << " cases";
      if (c.failures) os << ", " << c.failures << " failed";
      os << ")\n";
      if (c.failures) {
        os << "       counterexample: " << c.counterexample << "\n";
        ++bad;
      }
    }
  }
  os << (bad ? "FAILED " + std::to_string(bad) + " checks" : std::string("all checks passed")) << "\n";
  return os.str();
}

}  // namespace assoc
