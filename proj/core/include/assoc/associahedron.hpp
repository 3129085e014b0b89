#pragma once
// The associahedron K(n) in its inequality realization, with boundary
// insertions, faces and the monoid product.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "assoc/coords.hpp"
#include "assoc/hrep.hpp"

namespace assoc {

class KPoint {
 public:
  KPoint() : u_{Rat(0)} {}  // the unique point of K(1)
  explicit KPoint(RatVec u);

  std::size_t n() const { return u_.size(); }
  const RatVec& u() const { return u_; }
  const Rat& operator[](std::size_t i) const { return u_[i]; }

  bool operator==(const KPoint& o) const { return u_ == o.u_; }
  bool operator<(const KPoint& o) const { return u_ < o.u_; }

 private:
  RatVec u_;
};

struct KFaceId {
  std::size_t j = 1, r = 2, t = 2;  // r + t = n + 1, 1 <= j <= r
  bool operator==(const KFaceId&) const = default;
};

struct KDecomposition {
  KFaceId face;
  KPoint rho;  // outer factor in K(r)
  KPoint tau;  // inserted factor in K(t)
};

HRep k_hrep(std::size_t n);

// d_j(tau)(rho): tau inserted at position j of rho. Factors of arity 1 act
// as identities.
KPoint boundary_insert(const KPoint& rho, const KPoint& tau, std::size_t j);
// d'_j = d_{r-j+1}
KPoint boundary_insert_dual(const KPoint& rho, const KPoint& tau, std::size_t j);

bool in_face(const KPoint& p, const KFaceId& face);
// j = 1: K_1(n), some u_t = sum_{i<t}(1-u_i) with 1 < t < n.
// 1 < j < n: K_j(n), u_j = 0.
bool in_special_face(const KPoint& p, std::size_t j);
bool on_boundary(const KPoint& p);

// Every (j, r, t) decomposition, ordered by j and then by increasing r.
std::vector<KDecomposition> face_decompositions(const KPoint& p);
// The first entry of face_decompositions; throws for interior points.
KDecomposition face_decompose(const KPoint& p);

// rho . sigma = d_1(rho)(sigma)
KPoint monoid_product(const KPoint& rho, const KPoint& sigma);

// Shadow-coordinate points of all trivalent trees with n leaves.
std::set<KPoint> k_vertices(std::size_t n);

// Operad composition: every entry of `outer` is replaced by a block.
KPoint graft0(const KPoint& outer, const std::vector<KPoint>& blocks);

}  // namespace assoc
