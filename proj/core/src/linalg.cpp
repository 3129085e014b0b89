#include "linalg.hpp"

namespace assoc::linalg {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<RatVec> solve_unique(const Matrix& a, const RatVec& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t cols = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;  // inconsistent
  if (piv.size() != cols) return std::nullopt;
  RatVec x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[piv[i]] = aug[i][cols];
  return x;
}

std::vector<RatVec> nullspace(const Matrix& a, std::size_t cols) {
  Matrix m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace assoc::linalg
