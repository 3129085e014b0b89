#pragma once
// Coordinate-level operations shared by the K and J families. Points are
// plain RatVecs here; the validated wrappers live in associahedron.hpp and
// multiplihedron.hpp.

#include <cstddef>
#include <vector>

#include "assoc/rat.hpp"

namespace assoc {

// v in J^a(n): v_j <= sum_{i<j}(1 - v_i) + a for j < n, equality at j = n,
// all entries nonnegative. a = 0 gives K(n).
bool in_j(const RatVec& v, const Rat& a);
inline bool in_k(const RatVec& u) { return in_j(u, Rat(0)); }

// Insert `inner` at position j (1-based) of `outer`:
// (o_1..o_{j-1}, i_1..i_{t-1}, i_t + o_j, o_{j+1}..o_r).
RatVec insert_at(const RatVec& outer, std::size_t j, const RatVec& inner);

// Concatenate blocks, adding coeff*outer_k to the last entry of block k.
RatVec graft(const RatVec& outer, const std::vector<RatVec>& blocks, const Rat& coeff);

// max over 1 <= j < n of (S_j - (j-1)); the single entry when n = 1.
Rat level(const RatVec& v);

// Position of an inner block inside an outer tuple: block k covers
// positions offset[k] .. offset[k] + sizes[k] - 1 (0-based).
std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& sizes);

// All compositions of n into at least `min_parts` positive parts, ordered
// by part count and then lexicographically.
std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t min_parts);

}  // namespace assoc
