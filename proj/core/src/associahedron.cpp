#include "assoc/associahedron.hpp"

#include <algorithm>

#include "assoc/errors.hpp"
#include "assoc/multiplihedron.hpp"
#include "assoc/trees.hpp"

namespace assoc {

KPoint::KPoint(RatVec u) : u_(std::move(u)) {
  if (!in_k(u_)) throw DomainError("not a point of K(" + std::to_string(u_.size()) + "): " + str(u_));
}

HRep k_hrep(std::size_t n) { return j_hrep(n, Rat(0)); }

KPoint boundary_insert(const KPoint& rho, const KPoint& tau, std::size_t j) {
  return KPoint(insert_at(rho.u(), j, tau.u()));
}

KPoint boundary_insert_dual(const KPoint& rho, const KPoint& tau, std::size_t j) {
  if (j < 1 || j > rho.n()) throw DomainError("dual insertion position out of range");
  return boundary_insert(rho, tau, rho.n() - j + 1);
}

namespace {

std::optional<KDecomposition> try_decompose(const RatVec& u, std::size_t j, std::size_t t) {
  const std::size_t n = u.size();
  if (t < 2 || t > n - 1) return std::nullopt;
  const std::size_t r = n + 1 - t;
  if (j < 1 || j > r) return std::nullopt;
  RatVec tau(u.begin() + (j - 1), u.begin() + (j + t - 2));
  Rat total = Rat(t - 1) - sum(tau);
  tau.push_back(total);
  if (!in_k(tau)) return std::nullopt;
  Rat rest = u[j + t - 2] - total;
  if (rest < 0) return std::nullopt;
  RatVec rho(u.begin(), u.begin() + (j - 1));
  rho.push_back(rest);
  rho.insert(rho.end(), u.begin() + (j + t - 1), u.end());
  if (!in_k(rho)) return std::nullopt;
  return KDecomposition{KFaceId{j, r, t}, KPoint(std::move(rho)), KPoint(std::move(tau))};
}

}  // namespace

bool in_face(const KPoint& p, const KFaceId& f) {
  const std::size_t n = p.n();
  if (f.r < 2 || f.t < 2 || f.r + f.t != n + 1 || f.j < 1 || f.j > f.r)
    throw DomainError("face K_" + std::to_string(f.j) + "(" + std::to_string(f.r) + "," + std::to_string(f.t) +
                      ") is not a face of K(" + std::to_string(n) + ")");
  return try_decompose(p.u(), f.j, f.t).has_value();
}

bool in_special_face(const KPoint& p, std::size_t j) {
  const std::size_t n = p.n();
  if (j == 1) {
    Rat s = 0;
    for (std::size_t t = 1; t <= n; ++t) {
      if (t > 1 && t < n && p[t - 1] == Rat(t - 1) - s) return true;
      s += p[t - 1];
    }
    return false;
  }
  if (j > 1 && j < n) return p[j - 1] == 0;
  throw DomainError("special face index " + std::to_string(j) + " out of range for K(" + std::to_string(n) + ")");
}

bool on_boundary(const KPoint& p) {
  const std::size_t n = p.n();
  if (n < 3) return false;
  if (in_special_face(p, 1)) return true;
  for (std::size_t j = 2; j < n; ++j)
    if (p[j - 1] == 0) return true;
  return false;
}

std::vector<KDecomposition> face_decompositions(const KPoint& p) {
  std::vector<KDecomposition> out;
  const std::size_t n = p.n();
  if (n < 3) return out;
  for (std::size_t j = 1; j + 1 <= n; ++j)
    for (std::size_t r = std::max<std::size_t>(2, j); r + 1 <= n; ++r)
      if (auto d = try_decompose(p.u(), j, n + 1 - r)) out.push_back(std::move(*d));
  return out;
}

KDecomposition face_decompose(const KPoint& p) {
  auto all = face_decompositions(p);
  if (all.empty()) throw DomainError("face_decompose: " + str(p.u()) + " is not on the boundary");
  return all.front();
}

KPoint monoid_product(const KPoint& rho, const KPoint& sigma) { return boundary_insert(sigma, rho, 1); }

std::set<KPoint> k_vertices(std::size_t n) {
  std::set<KPoint> out;
  for (const auto& v : k_lattice(n)) out.insert(KPoint(v));
  return out;
}

KPoint graft0(const KPoint& outer, const std::vector<KPoint>& blocks) {
  std::vector<RatVec> b;
  b.reserve(blocks.size());
  for (const auto& x : blocks) b.push_back(x.u());
  return KPoint(graft(outer.u(), b, Rat(1)));
}

}  // namespace assoc
