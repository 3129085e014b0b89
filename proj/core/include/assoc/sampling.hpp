#pragma once
// Seeded random points for property checks.

#include <cstdint>
#include <random>

#include "assoc/multiplihedron.hpp"

namespace assoc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi);  // inclusive
  bool chance(int num, int den);
  // lo + (hi - lo) * k / den with k uniform in 0..den
  Rat grid(const Rat& lo, const Rat& hi, long den);
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[index(0, v.size() - 1)];
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Sequential sampler over the prefix bounds; about one coordinate in five
// is pushed to an end of its range so boundary points show up often.
RatVec random_j_coords(Rng& rng, std::size_t n, const Rat& a, long den = 6);
KPoint random_k(Rng& rng, std::size_t n, long den = 6);
JPoint random_j(Rng& rng, std::size_t n, const Rat& a, long den = 6);

// Entries k/den with 0 <= k <= max*den.
RatVec random_nonneg(Rng& rng, std::size_t n, long max = 3, long den = 4);

}  // namespace assoc
