#pragma once

#include "assoc/rat.hpp"

namespace testutil {

inline assoc::RatVec v(std::string_view s) { return assoc::parse_ratvec(s); }
inline assoc::Rat q(std::string_view s) { return assoc::parse_rat(s); }

}  // namespace testutil
