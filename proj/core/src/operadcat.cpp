#include "assoc/operadcat.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

#include "assoc/degeneracy.hpp"
#include "assoc/errors.hpp"

namespace assoc {

namespace {

template <class P>
std::size_t arity_sum(const std::vector<P>& tuple) {
  std::size_t s = 0;
  for (const auto& p : tuple) s += p.n();
  return s;
}

template <class P>
void check_tuple(const std::vector<P>& tuple) {
  if (tuple.size() < 2) throw DomainError("a morphism tuple needs at least two factors");
}

// Blocks of `inner` consumed by the factors of `outer`, one per factor.
template <class Outer, class P>
std::vector<std::vector<P>> split_blocks(const std::vector<Outer>& outer, const std::vector<P>& inner) {
  std::vector<std::vector<P>> out;
  std::size_t pos = 0;
  for (const auto& o : outer) {
    if (pos + o.n() > inner.size()) throw DomainError("composition: arity mismatch");
    out.emplace_back(inner.begin() + pos, inner.begin() + (pos + o.n()));
    pos += o.n();
  }
  if (pos != inner.size()) throw DomainError("composition: arity mismatch");
  return out;
}

std::vector<RatVec> coords(const std::vector<KPoint>& ps) {
  std::vector<RatVec> out;
  for (const auto& p : ps) out.push_back(p.u());
  return out;
}

}  // namespace

KMorphism make_k_morphism(std::vector<KPoint> tau) {
  check_tuple(tau);
  KMorphism m;
  m.source = tau.size() - 2;
  m.target = arity_sum(tau) - 2;
  m.tau = std::move(tau);
  return m;
}

JMorphism make_j_morphism(std::vector<JPoint> rho) {
  check_tuple(rho);
  for (const auto& r : rho)
    if (r.a() != rho[0].a()) throw DomainError("J tuple factors must share the parameter a");
  JMorphism m;
  m.source = rho.size() - 2;
  m.target = arity_sum(rho) - 2;
  m.rho = std::move(rho);
  return m;
}

KMorphism k_identity(std::size_t m) { return make_k_morphism(std::vector<KPoint>(m + 2)); }

JMorphism j_unit(std::size_t m, const Rat& a) {
  return make_j_morphism(std::vector<JPoint>(m + 2, JPoint(RatVec{a}, a)));
}

void check_deg_list(const DegIndexList& d, std::size_t m) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] < 1 || d[k] > m)
      throw DomainError("degeneracy index " + std::to_string(d[k]) + " outside 1.." + std::to_string(m));
    if (k > 0 && d[k] <= d[k - 1]) throw DomainError("degeneracy indices must be strictly increasing");
  }
}

KMorphism compose_k(const KMorphism& g, const KMorphism& f) {
  if (f.target != g.source) throw DomainError("compose_k: target of f differs from source of g");
  auto blocks = split_blocks(f.tau, g.tau);
  std::vector<KPoint> out;
  for (std::size_t i = 0; i < f.tau.size(); ++i) out.push_back(graft0(f.tau[i], blocks[i]));
  return make_k_morphism(std::move(out));
}

JMorphism compose_j(const JMorphism& g, const KMorphism& f) {
  if (f.target != g.source) throw DomainError("compose_j: target of f differs from source of g");
  auto blocks = split_blocks(f.tau, g.rho);
  std::vector<JPoint> out;
  for (std::size_t i = 0; i < f.tau.size(); ++i) out.push_back(delta_graft(f.tau[i], blocks[i]));
  return make_j_morphism(std::move(out));
}

JMorphism compose_mixed(const KMorphism& g, const JMorphism& f) {
  if (f.target != g.source) throw DomainError("compose_mixed: target of f differs from source of g");
  auto blocks = split_blocks(f.rho, g.tau);
  std::vector<JPoint> out;
  for (std::size_t i = 0; i < f.rho.size(); ++i)
    out.emplace_back(graft(f.rho[i].v(), coords(blocks[i]), Rat(1)), f.rho[i].a());
  return make_j_morphism(std::move(out));
}

DegIndexList compose_deg(const DegIndexList& outer, const DegIndexList& inner) {
  DegIndexList out = inner;
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  for (std::size_t i : outer) {
    std::size_t b = 0;
    while (true) {
      std::size_t lo = b == 0 ? 1 : inner[b - 1] - b + 1;
      std::size_t hi = b < inner.size() ? inner[b] - b : inf;
      if (lo <= i && i < hi) break;
      if (++b > inner.size()) throw DomainError("compose_deg: index " + std::to_string(i) + " has no slot");
    }
    out.push_back(i + b);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw Error("compose_deg: merged indices collide");
  return out;
}

namespace {

template <class M, class P, class D>
std::pair<M, DegIndexList> push_impl(std::size_t i, std::vector<P> tuple, std::size_t target, D degen,
                                     M (*make)(std::vector<P>)) {
  if (i < 1 || i > target)
    throw DomainError("degeneracy index " + std::to_string(i) + " outside 1.." + std::to_string(target));
  std::size_t pos = i + 1, j = 0;
  while (pos > tuple[j].n()) pos -= tuple[j++].n();
  if (tuple[j].n() > 1) {
    tuple[j] = degen(pos, tuple[j]);
    return {make(std::move(tuple)), {}};
  }
  tuple.erase(tuple.begin() + j);
  return {make(std::move(tuple)), {j}};
}

}  // namespace

std::pair<KMorphism, DegIndexList> push_deg(std::size_t i, const KMorphism& t) {
  return push_impl(i, t.tau, t.target, [](std::size_t k, const KPoint& p) { return d_k(k, p); }, &make_k_morphism);
}

std::pair<JMorphism, DegIndexList> push_deg(std::size_t i, const JMorphism& t) {
  return push_impl(i, t.rho, t.target, [](std::size_t k, const JPoint& p) { return d_j(k, p); }, &make_j_morphism);
}

// ---------------------------------------------------------------- unital morphisms

Obj UnitalMorphism::source() const {
  return std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        bool primed = std::is_same_v<T, KMorphism> && primed_source;
        return Obj{t.source + deg.size(), primed};
      },
      tuple);
}

Obj UnitalMorphism::target() const {
  return std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        bool primed = std::is_same_v<T, JMorphism> || primed_source;
        return Obj{t.target, primed};
      },
      tuple);
}

UnitalMorphism unital(KMorphism t, bool primed) { return UnitalMorphism{{}, std::move(t), primed}; }

UnitalMorphism unital(JMorphism t) { return UnitalMorphism{{}, std::move(t), false}; }

UnitalMorphism unital_deg(DegIndexList d, std::size_t m, bool primed) {
  check_deg_list(d, m);
  std::size_t l = m - d.size();
  return UnitalMorphism{std::move(d), k_identity(l), primed};
}

UnitalMorphism compose(const UnitalMorphism& g, const UnitalMorphism& f) {
  Obj mid = f.target();
  Obj gs = g.source();
  if (mid.primed && !gs.primed && gs.n == mid.n) throw DomainError("no morphisms from a primed to a plain object");
  if (!(mid == gs)) throw DomainError("compose: target of f differs from source of g");
  // Move the degeneracies of g past the tuple of f.
  auto tuple = f.tuple;
  DegIndexList acc = f.deg;
  for (auto it = g.deg.rbegin(); it != g.deg.rend(); ++it) {
    DegIndexList e;
    std::visit(
        [&](auto& t) {
          auto [t2, e2] = push_deg(*it, t);
          t = std::move(t2);
          e = std::move(e2);
        },
        tuple);
    acc = compose_deg(e, acc);
  }
  UnitalMorphism out;
  out.deg = std::move(acc);
  out.primed_source = f.primed_source;
  if (const auto* g2 = std::get_if<KMorphism>(&g.tuple)) {
    if (const auto* f2 = std::get_if<KMorphism>(&tuple))
      out.tuple = compose_k(*g2, *f2);
    else
      out.tuple = compose_mixed(*g2, std::get<JMorphism>(tuple));
  } else {
    const auto* f2 = std::get_if<KMorphism>(&tuple);
    if (!f2) throw DomainError("no morphisms from a primed to a plain object");
    out.tuple = compose_j(std::get<JMorphism>(g.tuple), *f2);
  }
  return out;
}

// ---------------------------------------------------------------- representations

KPoint apply_deg(const DegIndexList& d, const KPoint& x) {
  KPoint y = x;
  for (auto it = d.rbegin(); it != d.rend(); ++it) y = d_k(*it + 1, y);
  return y;
}

JPoint apply_deg(const DegIndexList& d, const JPoint& x) {
  JPoint y = x;
  for (auto it = d.rbegin(); it != d.rend(); ++it) y = d_j(*it + 1, y);
  return y;
}

RepElement rep_apply(Rep rep, const UnitalMorphism& m, const RepElement& x) {
  const bool unital_rep = rep == Rep::KBreve || rep == Rep::J0Breve || rep == Rep::JBreve;
  if (!unital_rep && !m.deg.empty()) throw DomainError("rep_apply: degeneracies need a unital representation");
  const bool j_category = rep == Rep::JBar || rep == Rep::JBreve;
  if (!j_category && (m.primed_source || std::holds_alternative<JMorphism>(m.tuple)))
    throw DomainError("rep_apply: morphism is not in the K category");
  Obj s = m.source();
  const bool on_j = rep == Rep::J0Bar || rep == Rep::J0Breve || s.primed;
  const std::size_t want = s.n + 2;
  if (on_j) {
    const auto* p = std::get_if<JPoint>(&x);
    if (!p || p->n() != want) throw DomainError("rep_apply: element is not in J(" + std::to_string(want) + ")");
    if (rep == Rep::J0Bar && !in_j_zero(*p)) throw DomainError("rep_apply: element is not in J_0");
    JPoint y = apply_deg(m.deg, *p);
    const auto& t = std::get<KMorphism>(m.tuple);
    return JPoint(graft(y.v(), coords(t.tau), Rat(1)), y.a());
  }
  const auto* p = std::get_if<KPoint>(&x);
  if (!p || p->n() != want) throw DomainError("rep_apply: element is not in K(" + std::to_string(want) + ")");
  KPoint y = apply_deg(m.deg, *p);
  if (const auto* t = std::get_if<KMorphism>(&m.tuple)) return graft0(y, t->tau);
  return delta_graft(y, std::get<JMorphism>(m.tuple).rho);
}

}  // namespace assoc
