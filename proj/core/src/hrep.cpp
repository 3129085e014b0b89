#include "assoc/hrep.hpp"

#include <functional>

#include "assoc/errors.hpp"
#include "linalg.hpp"

namespace assoc {

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += a[i] * b[i];
  return s;
}

bool contains(const HRep& h, const RatVec& p) {
  if (p.size() != h.dim)
    throw DomainError("contains: point has dimension " + std::to_string(p.size()) + ", system has " +
                      std::to_string(h.dim));
  for (const auto& e : h.equalities)
    if (dot(e.normal, p) != e.offset) return false;
  for (const auto& ie : h.inequalities)
    if (dot(ie.normal, p) > ie.offset) return false;
  return true;
}

std::vector<std::size_t> tight_inequalities(const HRep& h, const RatVec& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.inequalities.size(); ++i)
    if (dot(h.inequalities[i].normal, p) == h.inequalities[i].offset) out.push_back(i);
  return out;
}

RayExit ray_exit(const HRep& h, const RatVec& center, const RatVec& through) {
  if (center.size() != h.dim || through.size() != h.dim) throw DomainError("ray_exit: dimension mismatch");
  if (center == through) throw DomainError("ray_exit: through equals center");
  if (!contains(h, through)) throw DomainError("ray_exit: through point " + str(through) + " is not in the system");
  for (const auto& e : h.equalities)
    if (dot(e.normal, center) != e.offset) throw DomainError("ray_exit: center violates an equality");
  RatVec d(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) d[i] = through[i] - center[i];

  bool found = false;
  Rat lambda;
  for (const auto& ie : h.inequalities) {
    Rat slack = ie.offset - dot(ie.normal, center);
    if (slack <= 0) throw DomainError("ray_exit: center " + str(center) + " lies on the boundary");
    Rat nd = dot(ie.normal, d);
    if (nd <= 0) continue;
    Rat l = slack / nd;
    if (!found || l < lambda) {
      lambda = l;
      found = true;
    }
  }
  if (!found) throw DomainError("ray_exit: ray never leaves the system");
  RayExit out;
  out.exit.resize(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) out.exit[i] = center[i] + lambda * d[i];
  out.t = 1 - 1 / lambda;
  return out;
}

namespace {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - idx.size()) <= n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::set<RatVec> vertex_enum(const HRep& h) {
  if (h.dim > kVertexEnumMaxDim)
    throw SizeLimitError("vertex_enum: dimension " + std::to_string(h.dim) + " exceeds limit " +
                         std::to_string(kVertexEnumMaxDim));
  const std::size_t d = h.dim;
  linalg::Matrix eq_rows;
  RatVec eq_rhs;
  for (const auto& e : h.equalities) {
    eq_rows.push_back(e.normal);
    eq_rhs.push_back(e.offset);
  }
  linalg::Matrix all_rows = eq_rows;
  for (const auto& ie : h.inequalities) all_rows.push_back(ie.normal);
  if (!linalg::nullspace(all_rows, d).empty()) throw DomainError("vertex_enum: unbounded system (contains a line)");

  const std::size_t e = linalg::rank(eq_rows);
  const std::size_t k = d - e;
  const std::size_t m = h.inequalities.size();
  std::set<RatVec> out;

  if (k == 0) {
    auto x = linalg::solve_unique(eq_rows, eq_rhs);
    if (x && contains(h, *x)) out.insert(*x);
    return out;
  }

  // Extreme rays of the recession cone would make the system unbounded.
  for_each_combination(m, k - 1, [&](const std::vector<std::size_t>& s) {
    linalg::Matrix rows = eq_rows;
    for (auto i : s) rows.push_back(h.inequalities[i].normal);
    auto ns = linalg::nullspace(rows, d);
    if (ns.size() != 1) return;
    for (int sign : {1, -1}) {
      bool recedes = true;
      for (const auto& ie : h.inequalities)
        if (sign * dot(ie.normal, ns[0]) > 0) {
          recedes = false;
          break;
        }
      if (recedes) throw DomainError("vertex_enum: unbounded system");
    }
  });

  for_each_combination(m, k, [&](const std::vector<std::size_t>& s) {
    linalg::Matrix rows = eq_rows;
    RatVec rhs = eq_rhs;
    for (auto i : s) {
      rows.push_back(h.inequalities[i].normal);
      rhs.push_back(h.inequalities[i].offset);
    }
    auto x = linalg::solve_unique(rows, rhs);
    if (x && contains(h, *x)) out.insert(std::move(*x));
  });
  return out;
}

}  // namespace assoc
