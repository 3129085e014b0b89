#pragma once
// The shift map xi and the degeneracy operators built from it.

#include <cstddef>
#include <functional>

#include "assoc/multiplihedron.hpp"

namespace assoc {

// t'_1 = max(0, t_1 - 1),
// t'_k = min(t_k, max_{j<=k}(S_j - j) - sum_{i<k} t'_i + (k - 1)).
RatVec xi(const RatVec& t);

// Coordinate form shared by d^K and d^{J,a}.
RatVec degenerate(std::size_t j, const RatVec& t);

KPoint d_k(std::size_t j, const KPoint& sigma);
JPoint d_j(std::size_t j, const JPoint& rho);

using KDegeneracy = std::function<KPoint(std::size_t, const KPoint&)>;
using JDegeneracy = std::function<JPoint(std::size_t, const JPoint&)>;

// (1-u) d_j(sigma) + u d'_j(sigma)
KPoint interpolate_degeneracy(const Rat& u, const KDegeneracy& d, const KDegeneracy& d2, std::size_t j,
                              const KPoint& sigma);
JPoint interpolate_degeneracy(const Rat& u, const JDegeneracy& d, const JDegeneracy& d2, std::size_t j,
                              const JPoint& rho);

}  // namespace assoc
