#pragma once

#include <cstdint>
#include <utility>

namespace logdepth {

// The splitting schedule Delta_0 = 2, eps_u = floor(Delta_u / 2),
// Delta_{u+1} = Delta_u + eps_u.
inline constexpr int kDeltaTableSize = 72;

const uint64_t* delta_table();  // Delta_0 .. Delta_{kDeltaTableSize-1}
const uint64_t* eps_table();

std::pair<uint64_t, uint64_t> delta_eps(unsigned u);  // (Delta_u, eps_u)

// least u+1 with Delta_{u+1} >= width (width >= 1); returns the value u+1
unsigned delta_level_for(uint64_t width);

}  // namespace logdepth
