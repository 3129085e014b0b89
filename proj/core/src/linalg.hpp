#pragma once
// Dense exact Gaussian elimination used by the vertex enumerator.

#include <optional>
#include <vector>

#include "assoc/rat.hpp"

namespace assoc::linalg {

using Matrix = std::vector<RatVec>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Unique solution of A x = b, or nullopt when inconsistent or underdetermined.
std::optional<RatVec> solve_unique(const Matrix& a, const RatVec& b);

// Basis of {x : A x = 0}; `cols` is needed when A has no rows.
std::vector<RatVec> nullspace(const Matrix& a, std::size_t cols);

}  // namespace assoc::linalg
