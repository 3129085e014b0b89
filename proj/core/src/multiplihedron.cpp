#include "assoc/multiplihedron.hpp"

#include <algorithm>
#include <optional>
#include <type_traits>

#include "assoc/errors.hpp"

namespace assoc {

namespace {

void check_parameter(const Rat& a) {
  if (a < 0 || a > 1) throw DomainError("parameter " + str(a) + " outside [0,1]");
}

}  // namespace

JPoint::JPoint(RatVec v, Rat a) : v_(std::move(v)), a_(std::move(a)) {
  check_parameter(a_);
  if (!in_j(v_, a_))
    throw DomainError("not a point of J^" + str(a_) + "(" + std::to_string(v_.size()) + "): " + str(v_));
}

HRep j_hrep(std::size_t n, const Rat& a) {
  if (n == 0) throw DomainError("polytope arity must be at least 1");
  check_parameter(a);
  HRep h;
  h.dim = n;
  for (std::size_t j = 1; j < n; ++j) {
    RatVec prefix(n);
    for (std::size_t i = 0; i < j; ++i) prefix[i] = 1;
    if (a == 0 && j == 1) {
      // 0 <= u_1 <= 0 collapses to an equality
      h.equalities.push_back({prefix, Rat(0)});
      continue;
    }
    RatVec neg(n);
    neg[j - 1] = -1;
    h.inequalities.push_back({neg, Rat(0)});
    h.inequalities.push_back({prefix, Rat(j - 1) + a});
  }
  h.equalities.push_back({RatVec(n, Rat(1)), Rat(n - 1) + a});
  return h;
}

KPoint embed_in_k(const JPoint& p) {
  RatVec u{Rat(0)};
  u.insert(u.end(), p.v().begin(), p.v().end());
  u.back() += 1 - p.a();
  return KPoint(std::move(u));
}

JPoint delta_insert(const JPoint& rho, const KPoint& tau, std::size_t j) {
  return JPoint(insert_at(rho.v(), j, tau.u()), rho.a());
}

namespace {

const Rat& common_parameter(const std::vector<JPoint>& rhos) {
  if (rhos.empty()) throw DomainError("no factors supplied");
  for (const auto& r : rhos)
    if (r.a() != rhos[0].a()) throw DomainError("factors do not share the parameter a");
  return rhos[0].a();
}

std::vector<RatVec> coords_of(const std::vector<JPoint>& rhos) {
  std::vector<RatVec> out;
  out.reserve(rhos.size());
  for (const auto& r : rhos) out.push_back(r.v());
  return out;
}

}  // namespace

JPoint delta_graft(const KPoint& tau, const std::vector<JPoint>& rhos) {
  const Rat& a = common_parameter(rhos);
  if (tau.n() != rhos.size())
    throw DomainError("delta_graft: outer arity " + std::to_string(tau.n()) + " but " +
                      std::to_string(rhos.size()) + " factors");
  return JPoint(graft(tau.u(), coords_of(rhos), 1 - a), a);
}

JPoint delta_rel(const JPoint& outer, const std::vector<JPoint>& rhos) {
  const Rat& a = common_parameter(rhos);
  if (a == 1) throw DomainError("delta_rel: inner parameter must be below 1");
  if (outer.n() != rhos.size()) throw DomainError("delta_rel: arity mismatch");
  Rat b = a + outer.a() * (1 - a);
  return JPoint(graft(outer.v(), coords_of(rhos), 1 - a), b);
}

bool in_j_zero(const JPoint& p) {
  Rat s = 0;
  for (std::size_t i = 1; i < p.n(); ++i) {
    s += p[i - 1];
    if (s == Rat(i - 1) + p.a()) return true;
  }
  return false;
}

namespace {

std::optional<JInsertDecomposition> try_insert(const JPoint& p, std::size_t j, std::size_t t) {
  const std::size_t n = p.n();
  if (t < 2 || t > n) return std::nullopt;
  const std::size_t r = n + 1 - t;
  if (j < 1 || j > r) return std::nullopt;
  const RatVec& v = p.v();
  RatVec tau(v.begin() + (j - 1), v.begin() + (j + t - 2));
  Rat total = Rat(t - 1) - sum(tau);
  tau.push_back(total);
  if (!in_k(tau)) return std::nullopt;
  Rat rest = v[j + t - 2] - total;
  if (rest < 0) return std::nullopt;
  RatVec rho(v.begin(), v.begin() + (j - 1));
  rho.push_back(rest);
  rho.insert(rho.end(), v.begin() + (j + t - 1), v.end());
  if (!in_j(rho, p.a())) return std::nullopt;
  return JInsertDecomposition{JInsertFace{j, r, t}, JPoint(std::move(rho), p.a()), KPoint(std::move(tau))};
}

// Splits p into blocks with the given sizes, each completed to a J^a point;
// the residues of the block ends form the outer factor at parameter r.
std::optional<std::pair<RatVec, std::vector<JPoint>>> try_blocks(const RatVec& v, const Rat& a,
                                                                 const std::vector<std::size_t>& sizes,
                                                                 const Rat& r) {
  std::vector<JPoint> rhos;
  RatVec outer;
  std::size_t pos = 0;
  for (std::size_t m : sizes) {
    RatVec blk(v.begin() + pos, v.begin() + (pos + m - 1));
    Rat last = Rat(m - 1) - sum(blk) + a;
    blk.push_back(last);
    if (!in_j(blk, a)) return std::nullopt;
    Rat end = v[pos + m - 1];
    if (a == 1) {
      if (end != last) return std::nullopt;
      outer.push_back(0);
    } else {
      outer.push_back((end - last) / (1 - a));
    }
    rhos.emplace_back(std::move(blk), a);
    pos += m;
  }
  if (a == 1) {
    // the outer factor carries no weight; use the all-ones point
    for (std::size_t k = 1; k < outer.size(); ++k) outer[k] = 1;
    outer.back() = Rat(outer.size() - 1) - sum(outer, 0, outer.size() - 1) + r;
  }
  if (!in_j(outer, r)) return std::nullopt;
  return std::make_pair(std::move(outer), std::move(rhos));
}

std::optional<JGraftDecomposition> try_graft(const JPoint& p, const std::vector<std::size_t>& sizes) {
  auto res = try_blocks(p.v(), p.a(), sizes, Rat(0));
  if (!res) return std::nullopt;
  return JGraftDecomposition{KPoint(std::move(res->first)), std::move(res->second)};
}

std::size_t total(const std::vector<std::size_t>& sizes) {
  std::size_t s = 0;
  for (auto x : sizes) s += x;
  return s;
}

}  // namespace

bool j_face_membership(const JPoint& p, const JFaceId& face) {
  const std::size_t n = p.n();
  return std::visit(
      [&](const auto& f) -> bool {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, JInsertFace>) {
          if (f.t < 2 || f.r < 1 || f.r + f.t != n + 1 || f.j < 1 || f.j > f.r)
            throw DomainError("not an insertion face of J(" + std::to_string(n) + ")");
          return try_insert(p, f.j, f.t).has_value();
        } else if constexpr (std::is_same_v<F, JGraftFace>) {
          if (f.sizes.size() < 2 || total(f.sizes) != n)
            throw DomainError("not a graft face of J(" + std::to_string(n) + ")");
          for (auto s : f.sizes)
            if (s == 0) throw DomainError("graft face with an empty block");
          return try_graft(p, f.sizes).has_value();
        } else if constexpr (std::is_same_v<F, JSpecialFace>) {
          if (f.j < 1 || f.j > n) throw DomainError("special face index out of range");
          return p[f.j - 1] == 0;
        } else if constexpr (std::is_same_v<F, JZeroFace>) {
          return in_j_zero(p);
        } else {
          if (f.s < 2 || f.r < 1 || f.r + f.s != n + 1 || f.k < 1 || f.k > f.r)
            throw DomainError("not an insertion face of J(" + std::to_string(n) + ")");
          auto d = try_insert(p, f.k, f.s);
          return d && in_j_zero(d->rho);
        }
      },
      face);
}

bool on_boundary(const JPoint& p) {
  const std::size_t n = p.n();
  if (n < 2) return false;
  Rat s = 0;
  for (std::size_t j = 1; j < n; ++j) {
    s += p[j - 1];
    if (p.a() == 0 && j == 1) continue;
    if (p[j - 1] == 0 || s == Rat(j - 1) + p.a()) return true;
  }
  return false;
}

std::vector<JInsertDecomposition> j_insert_decompositions(const JPoint& p) {
  std::vector<JInsertDecomposition> out;
  const std::size_t n = p.n();
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t r = std::max<std::size_t>(1, j); r + 1 <= n; ++r)
      if (auto d = try_insert(p, j, n + 1 - r)) out.push_back(std::move(*d));
  return out;
}

std::vector<JGraftDecomposition> j_graft_decompositions(const JPoint& p) {
  std::vector<JGraftDecomposition> out;
  for (const auto& c : compositions(p.n(), 2))
    if (auto d = try_graft(p, c)) out.push_back(std::move(*d));
  return out;
}

JPoint shift_embed(const JPoint& p, const Rat& b) {
  if (b < p.a()) throw DomainError("shift_embed: target parameter below source parameter");
  RatVec v = p.v();
  v.back() += b - p.a();
  return JPoint(std::move(v), b);
}

SweepResult sweep_decompose(const JPoint& p, const Rat& a) {
  const Rat& b = p.a();
  if (a < 0 || a > b) throw DomainError("sweep_decompose: need 0 <= a <= b");
  if (a == b || p.n() == 1 || level(p.v()) <= a) {
    RatVec v = p.v();
    v.back() -= b - a;
    return SweepInJa{JPoint(std::move(v), a)};
  }
  const Rat r = (b - a) / (1 - a);
  for (const auto& c : compositions(p.n(), 2))
    if (auto res = try_blocks(p.v(), a, c, r)) return SweepGraft{JPoint(std::move(res->first), r), std::move(res->second)};
  throw Error("sweep_decompose: no decomposition found for " + str(p.v()));
}

JPoint recompose(const SweepResult& s, const Rat& b) {
  if (const auto* in = std::get_if<SweepInJa>(&s)) return shift_embed(in->point, b);
  const auto& g = std::get<SweepGraft>(s);
  JPoint out = delta_rel(g.outer, g.rhos);
  if (out.a() != b) throw DomainError("recompose: parameter mismatch");
  return out;
}

}  // namespace assoc
