#include "assoc/sampling.hpp"

namespace assoc {

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
}

bool Rng::chance(int num, int den) { return std::uniform_int_distribution<int>(0, den - 1)(eng_) < num; }

Rat Rng::grid(const Rat& lo, const Rat& hi, long den) {
  long k = std::uniform_int_distribution<long>(0, den)(eng_);
  return lo + (hi - lo) * rat(k, den);
}

RatVec random_j_coords(Rng& rng, std::size_t n, const Rat& a, long den) {
  RatVec v;
  v.reserve(n);
  Rat s = 0;
  for (std::size_t j = 1; j < n; ++j) {
    Rat bound = Rat(j - 1) - s + a;
    Rat x;
    if (rng.chance(1, 5))
      x = rng.chance(1, 2) ? Rat(0) : bound;
    else
      x = rng.grid(Rat(0), bound, den);
    v.push_back(x);
    s += x;
  }
  v.push_back(Rat(n - 1) - s + a);
  return v;
}

KPoint random_k(Rng& rng, std::size_t n, long den) { return KPoint(random_j_coords(rng, n, Rat(0), den)); }

JPoint random_j(Rng& rng, std::size_t n, const Rat& a, long den) {
  return JPoint(random_j_coords(rng, n, a, den), a);
}

RatVec random_nonneg(Rng& rng, std::size_t n, long max, long den) {
  RatVec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rat(std::uniform_int_distribution<long>(0, max * den)(rng.engine()), den));
  return v;
}

}  // namespace assoc
