#pragma once
// JSON and OFF serialization of polytopes and bar complexes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/barcx.hpp"
#include "assoc/hrep.hpp"

namespace assoc {

struct PolytopeData {
  std::string family;  // "k" or "j"
  std::size_t n = 0;
  std::optional<Rat> a;  // j only
  std::vector<RatVec> vertices;  // lattice vertices from trees
  HRep hrep;
  bool operator==(const PolytopeData&) const = default;
};

inline constexpr std::size_t kMaxExportK = 9;
inline constexpr std::size_t kMaxExportJ = 8;

PolytopeData polytope_data(std::string_view family, std::size_t n, const Rat& a);

// {"family","n","a"?,"vertices":[[[num,den],..],..],"hrep":{..}}
std::string to_json(const PolytopeData& p);
PolytopeData polytope_from_json(std::string_view text);

// Free coordinates padded to 3D (K: u_2..u_{n-1}; J: v_1..v_{n-1}).
inline constexpr std::size_t kMaxOffK = 5;
inline constexpr std::size_t kMaxOffJ = 4;
std::string to_off(const PolytopeData& p);

std::string to_json(const BarComplex& bc, const FiniteMonoid& x);

}  // namespace assoc
