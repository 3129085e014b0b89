#include "assoc/degeneracy.hpp"

#include <algorithm>

#include "assoc/errors.hpp"

namespace assoc {

RatVec xi(const RatVec& t) {
  RatVec out;
  out.reserve(t.size());
  Rat prefix = 0, best, produced = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < 0) throw DomainError("xi: negative entry " + str(t[k]));
    prefix += t[k];
    Rat c = prefix - Rat(k + 1);
    if (k == 0 || c > best) best = c;
    Rat x;
    if (k == 0)
      x = t[0] > 1 ? Rat(t[0] - 1) : Rat(0);
    else
      x = std::min(t[k], Rat(best - produced + Rat(k)));
    produced += x;
    out.push_back(std::move(x));
  }
  return out;
}

RatVec degenerate(std::size_t j, const RatVec& t) {
  const std::size_t n = t.size();
  if (n < 2) throw DomainError("degeneracy needs arity at least 2");
  if (j < 1 || j > n) throw DomainError("degeneracy index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
  if (j == 1) {
    RatVec x = xi(t);
    return RatVec(x.begin() + 1, x.end());
  }
  RatVec x = xi(RatVec(t.begin() + (j - 1), t.end()));
  RatVec out(t.begin(), t.begin() + (j - 2));
  out.push_back(t[j - 2] + x[0]);
  out.insert(out.end(), x.begin() + 1, x.end());
  return out;
}

KPoint d_k(std::size_t j, const KPoint& sigma) { return KPoint(degenerate(j, sigma.u())); }

JPoint d_j(std::size_t j, const JPoint& rho) { return JPoint(degenerate(j, rho.v()), rho.a()); }

namespace {

void check_weight(const Rat& u) {
  if (u < 0 || u > 1) throw DomainError("interpolation weight " + str(u) + " outside [0,1]");
}

}  // namespace

KPoint interpolate_degeneracy(const Rat& u, const KDegeneracy& d, const KDegeneracy& d2, std::size_t j,
                              const KPoint& sigma) {
  check_weight(u);
  return KPoint(affine(1 - u, d(j, sigma).u(), d2(j, sigma).u()));
}

JPoint interpolate_degeneracy(const Rat& u, const JDegeneracy& d, const JDegeneracy& d2, std::size_t j,
                              const JPoint& rho) {
  check_weight(u);
  JPoint x = d(j, rho), y = d2(j, rho);
  if (x.a() != y.a()) throw DomainError("interpolate_degeneracy: parameter mismatch");
  return JPoint(affine(1 - u, x.v(), y.v()), x.a());
}

}  // namespace assoc
