#pragma once
// Halfspace systems over the rationals: membership, ray exits and
// exhaustive vertex enumeration for small dimensions.

#include <cstddef>
#include <set>
#include <vector>

#include "assoc/rat.hpp"

namespace assoc {

struct Halfspace {
  RatVec normal;
  Rat offset;
  bool operator==(const Halfspace&) const = default;
};

// normal . x <= offset for inequalities, normal . x = offset for equalities.
struct HRep {
  std::size_t dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<Halfspace> equalities;
  bool operator==(const HRep&) const = default;
};

inline constexpr std::size_t kVertexEnumMaxDim = 8;

Rat dot(const RatVec& a, const RatVec& b);

bool contains(const HRep& h, const RatVec& p);

struct RayExit {
  RatVec exit;
  Rat t;  // through = t*center + (1-t)*exit
};

// Walks from center through `through` until the boundary of h.
RayExit ray_exit(const HRep& h, const RatVec& center, const RatVec& through);

// Indices of the inequalities of h that hold with equality at p.
std::vector<std::size_t> tight_inequalities(const HRep& h, const RatVec& p);

std::set<RatVec> vertex_enum(const HRep& h);

}  // namespace assoc
