#include "assoc/coords.hpp"

#include <algorithm>

#include "assoc/errors.hpp"

namespace assoc {

bool in_j(const RatVec& v, const Rat& a) {
  const std::size_t n = v.size();
  if (n == 0) return false;
  Rat s = 0;  // sum of v_1..v_{j-1}
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (v[j] < 0) return false;
    if (v[j] > Rat(j) - s + a) return false;
    s += v[j];
  }
  return v[n - 1] >= 0 && v[n - 1] == Rat(n - 1) - s + a;
}

RatVec insert_at(const RatVec& outer, std::size_t j, const RatVec& inner) {
  if (j < 1 || j > outer.size())
    throw DomainError("insertion position " + std::to_string(j) + " out of range 1.." + std::to_string(outer.size()));
  if (inner.empty()) throw DomainError("insert_at: empty inner factor");
  RatVec out;
  out.reserve(outer.size() + inner.size() - 1);
  out.insert(out.end(), outer.begin(), outer.begin() + (j - 1));
  out.insert(out.end(), inner.begin(), inner.end() - 1);
  out.push_back(inner.back() + outer[j - 1]);
  out.insert(out.end(), outer.begin() + j, outer.end());
  return out;
}

RatVec graft(const RatVec& outer, const std::vector<RatVec>& blocks, const Rat& coeff) {
  if (outer.size() != blocks.size())
    throw DomainError("graft: outer arity " + std::to_string(outer.size()) + " but " + std::to_string(blocks.size()) +
                      " blocks");
  RatVec out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (blocks[k].empty()) throw DomainError("graft: empty block");
    out.insert(out.end(), blocks[k].begin(), blocks[k].end());
    out.back() += coeff * outer[k];
  }
  return out;
}

Rat level(const RatVec& v) {
  if (v.empty()) throw DomainError("level: empty vector");
  if (v.size() == 1) return v[0];
  Rat s = 0, best;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    s += v[j];
    Rat c = s - Rat(j);
    if (j == 0 || c > best) best = c;
  }
  return best;
}

std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size());
  std::size_t acc = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    off[k] = acc;
    acc += sizes[k];
  }
  return off;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t min_parts) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  const std::size_t cuts = n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cuts); ++mask) {
    std::vector<std::size_t> c;
    std::size_t cur = 1;
    for (std::size_t b = 0; b < cuts; ++b) {
      if (mask >> b & 1) {
        c.push_back(cur);
        cur = 1;
      } else {
        ++cur;
      }
    }
    c.push_back(cur);
    if (c.size() >= min_parts) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace assoc
