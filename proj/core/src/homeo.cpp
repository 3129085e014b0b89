#include "assoc/homeo.hpp"

#include <optional>
#include <type_traits>

#include "assoc/errors.hpp"

namespace assoc {

KPoint alpha(const Rat& a, std::size_t n) {
  if (n < 2) throw DomainError("alpha needs n >= 2");
  if (n == 2) return KPoint(RatVec{Rat(0), Rat(1)});
  RatVec u(n, Rat(1));
  u[0] = 0;
  u[1] = 1 - a / 2;
  u[n - 1] = 1 + a / 2;
  return KPoint(std::move(u));
}

JPoint beta(const Rat& a, std::size_t n) {
  if (n < 1) throw DomainError("beta needs n >= 1");
  RatVec v(n, Rat(1));
  v[0] = a;
  return JPoint(std::move(v), a);
}

namespace {

JPoint radial(const Rat& a, const KPoint& sigma, bool all, std::vector<JPoint>* values) {
  const std::size_t n = sigma.n();
  if (a == 0) return JPoint(sigma.u(), a);
  if (n == 1) return JPoint(RatVec{a}, a);
  if (n == 2) return beta(a, 2);
  KPoint c = alpha(a, n);
  if (sigma == c) {
    if (values) values->push_back(beta(a, n));
    return beta(a, n);
  }
  RayExit ex = ray_exit(k_hrep(n), c.u(), sigma.u());
  JPoint b = beta(a, n);
  std::optional<JPoint> first;
  for (const auto& d : face_decompositions(KPoint(ex.exit))) {
    JPoint y = delta_insert(omega(a, d.rho), d.tau, d.face.j);
    JPoint v(affine(ex.t, b.v(), y.v()), a);
    if (values) values->push_back(v);
    if (!first) first = v;
    if (!all) break;
  }
  if (!first) throw Error("omega: exit point " + str(ex.exit) + " has no face decomposition");
  return *first;
}

KPoint ds_case(std::size_t j, const KDecomposition& d, std::size_t n) {
  const std::size_t k = d.face.j, r = d.face.r, t = d.face.t;
  if (j < k && r > 2) return boundary_insert(d_s(j, d.rho), d.tau, k - 1);
  if (k <= j && j < k + t && t > 2) return boundary_insert(d.rho, d_s(j - k + 1, d.tau), k);
  if (k + t <= j && r > 2) return boundary_insert(d_s(j - t + 1, d.rho), d.tau, k);
  if ((j == k || j == k + 1) && t == 2) return d.rho;
  if (r == 2 && ((k == 2 && j == 1) || (k == 1 && j == n))) return d.tau;
  throw Error("d_s: no case applies");
}

KPoint ds_radial(std::size_t j, const KPoint& sigma, bool all, std::vector<KPoint>* values) {
  const std::size_t n = sigma.n();
  if (n < 2) throw DomainError("d_s needs n >= 2");
  if (j < 1 || j > n) throw DomainError("d_s: index out of range");
  if (n == 2) return KPoint();
  if (n == 3) return KPoint(RatVec{Rat(0), Rat(1)});
  KPoint c = alpha(Rat(1), n);
  KPoint c1 = alpha(Rat(1), n - 1);
  if (sigma == c) {
    if (values) values->push_back(c1);
    return c1;
  }
  RayExit ex = ray_exit(k_hrep(n), c.u(), sigma.u());
  std::optional<KPoint> first;
  for (const auto& d : face_decompositions(KPoint(ex.exit))) {
    KPoint v(affine(ex.t, c1.u(), ds_case(j, d, n).u()));
    if (values) values->push_back(v);
    if (!first) first = v;
    if (!all) break;
  }
  if (!first) throw Error("d_s: exit point " + str(ex.exit) + " has no face decomposition");
  return *first;
}

}  // namespace

JPoint omega(const Rat& a, const KPoint& sigma) { return radial(a, sigma, false, nullptr); }

std::vector<JPoint> omega_values(const Rat& a, const KPoint& sigma) {
  std::vector<JPoint> out;
  JPoint v = radial(a, sigma, true, &out);
  if (out.empty()) out.push_back(v);
  return out;
}

JPoint eta(const Rat& a, const Rat& t, const KPoint& sigma) {
  if (t < 0 || t > 1) throw DomainError("eta: t outside [0,1]");
  return omega(a * t, sigma);
}

KPoint eta1(const Rat& t, const KPoint& sigma) { return embed_in_k(eta(Rat(1), t, sigma)); }

KPoint d_s(std::size_t j, const KPoint& sigma) { return ds_radial(j, sigma, false, nullptr); }

std::vector<KPoint> d_s_values(std::size_t j, const KPoint& sigma) {
  std::vector<KPoint> out;
  KPoint v = ds_radial(j, sigma, true, &out);
  if (out.empty()) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- formal expressions

FormalJExprPtr make_base(JPoint p) { return std::make_shared<FormalJExpr>(FormalJExpr{BasePoint{std::move(p)}}); }

FormalJExprPtr make_delta_j(std::size_t j, FormalJExprPtr rho, KPoint tau) {
  if (!rho) throw DomainError("null expression");
  return std::make_shared<FormalJExpr>(FormalJExpr{DeltaJ{j, std::move(rho), std::move(tau)}});
}

FormalJExprPtr make_delta_graft(KPoint tau, std::vector<FormalJExprPtr> rhos) {
  for (const auto& r : rhos)
    if (!r) throw DomainError("null expression");
  return std::make_shared<FormalJExpr>(FormalJExpr{DeltaGraft{std::move(tau), std::move(rhos)}});
}

FormalJExprPtr make_delta_rel(FormalJExprPtr outer, std::vector<FormalJExprPtr> rhos) {
  if (!outer) throw DomainError("null expression");
  for (const auto& r : rhos)
    if (!r) throw DomainError("null expression");
  return std::make_shared<FormalJExpr>(FormalJExpr{DeltaRel{std::move(outer), std::move(rhos)}});
}

namespace {

std::vector<JPoint> evaluate_all(const std::vector<FormalJExprPtr>& es) {
  std::vector<JPoint> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(evaluate(*e));
  return out;
}

FormalJExprPtr rescale_expr(const Rat& lambda, const FormalJExprPtr& e);

std::vector<FormalJExprPtr> rescale_all(const Rat& lambda, const std::vector<FormalJExprPtr>& es) {
  std::vector<FormalJExprPtr> out;
  out.reserve(es.size());
  for (const auto& x : es) out.push_back(rescale_expr(lambda, x));
  return out;
}

FormalJExprPtr rescale_expr(const Rat& lambda, const FormalJExprPtr& e) {
  if (!e) throw DomainError("null expression");
  return std::visit(
      [&](const auto& n) -> FormalJExprPtr {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, BasePoint>) {
          return make_base(rescale(lambda, n.point));
        } else if constexpr (std::is_same_v<N, DeltaJ>) {
          return make_delta_j(n.j, rescale_expr(lambda, n.rho), n.tau);
        } else if constexpr (std::is_same_v<N, DeltaGraft>) {
          return make_delta_graft(n.tau, rescale_all(lambda, n.rhos));
        } else {
          if (n.rhos.empty()) throw DomainError("malformed expression: relative graft without factors");
          Rat inner = parameter(*n.rhos[0]);
          Rat outer = parameter(*n.outer);
          Rat ratio = 1;
          if (outer != 0) {
            Rat target = (lambda * (inner + outer * (1 - inner)) - lambda * inner) / (1 - lambda * inner);
            ratio = target / outer;
          }
          return make_delta_rel(rescale_expr(ratio, n.outer), rescale_all(lambda, n.rhos));
        }
      },
      e->node);
}

}  // namespace

JPoint evaluate(const FormalJExpr& e) {
  return std::visit(
      [](const auto& n) -> JPoint {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, BasePoint>) {
          return n.point;
        } else if constexpr (std::is_same_v<N, DeltaJ>) {
          return delta_insert(evaluate(*n.rho), n.tau, n.j);
        } else if constexpr (std::is_same_v<N, DeltaGraft>) {
          return delta_graft(n.tau, evaluate_all(n.rhos));
        } else {
          return delta_rel(evaluate(*n.outer), evaluate_all(n.rhos));
        }
      },
      e.node);
}

Rat parameter(const FormalJExpr& e) {
  return std::visit(
      [](const auto& n) -> Rat {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, BasePoint>) {
          return n.point.a();
        } else if constexpr (std::is_same_v<N, DeltaJ>) {
          return parameter(*n.rho);
        } else if constexpr (std::is_same_v<N, DeltaGraft>) {
          if (n.rhos.empty()) throw DomainError("malformed expression: graft without factors");
          return parameter(*n.rhos[0]);
        } else {
          if (n.rhos.empty()) throw DomainError("malformed expression: relative graft without factors");
          Rat inner = parameter(*n.rhos[0]);
          return inner + parameter(*n.outer) * (1 - inner);
        }
      },
      e.node);
}

FormalJExprPtr f_ab(const Rat& a, const Rat& b, const FormalJExprPtr& e) {
  if (a <= 0 || a >= 1) throw DomainError("f_ab: need 0 < a < 1");
  if (b < 0 || b > 1) throw DomainError("f_ab: need 0 <= b <= 1");
  if (!e) throw DomainError("null expression");
  if (parameter(*e) != a) throw DomainError("f_ab: expression does not evaluate at parameter " + str(a));
  return rescale_expr(b / a, e);
}

// ---------------------------------------------------------------- pointwise rescaling

namespace {

JPoint rescale_impl(const Rat& lambda, const JPoint& p, bool all, std::vector<JPoint>* values) {
  const Rat& a = p.a();
  if (lambda < 0) throw DomainError("rescale: negative ratio");
  if (lambda == 1) {
    if (values) values->push_back(p);
    return p;
  }
  if (p.n() == 1) {
    JPoint out(RatVec{lambda * a}, lambda * a);
    if (values) values->push_back(out);
    return out;
  }
  Rat e = level(p.v());
  if (e >= 1) throw DomainError("rescale: point lies on the top sweep level");
  RatVec q = p.v();
  q.back() -= a - e;
  std::optional<JPoint> first;
  auto finish = [&](RatVec res) {
    res.back() += lambda * (a - e);
    JPoint out(std::move(res), lambda * a);
    if (values) values->push_back(out);
    if (!first) first = out;
  };
  if (e == 0) {
    finish(q);
  } else {
    for (const auto& d : j_graft_decompositions(JPoint(q, e))) {
      std::vector<RatVec> blocks;
      for (const auto& r : d.rhos) blocks.push_back(rescale(lambda, r).v());
      finish(graft(d.tau.u(), blocks, 1 - lambda * e));
      if (!all) break;
    }
  }
  if (!first) throw Error("rescale: no graft decomposition of " + str(q));
  return *first;
}

}  // namespace

JPoint rescale(const Rat& lambda, const JPoint& p) { return rescale_impl(lambda, p, false, nullptr); }

std::vector<JPoint> rescale_values(const Rat& lambda, const JPoint& p) {
  std::vector<JPoint> out;
  rescale_impl(lambda, p, true, &out);
  return out;
}

KPoint pi_geometric(const JPoint& p) {
  if (p.a() == 1) throw DomainError("pi: parameter must be below 1");
  return KPoint(rescale(Rat(0), p).v());
}

}  // namespace assoc
