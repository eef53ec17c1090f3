#include "logdepth/delta.hpp"

#include <stdexcept>

namespace logdepth {

namespace {
struct Tables {
  uint64_t delta[kDeltaTableSize];
  uint64_t eps[kDeltaTableSize];
  Tables() {
    delta[0] = 2;
    for (int u = 0; u < kDeltaTableSize; ++u) {
      eps[u] = delta[u] / 2;
      if (u + 1 < kDeltaTableSize) delta[u + 1] = delta[u] + eps[u];
    }
  }
};
const Tables& tables() {
  static const Tables t;
  return t;
}
}  // namespace

const uint64_t* delta_table() { return tables().delta; }
const uint64_t* eps_table() { return tables().eps; }

std::pair<uint64_t, uint64_t> delta_eps(unsigned u) {
  if (u >= kDeltaTableSize) throw std::out_of_range("delta_eps: u out of table range");
  return {tables().delta[u], tables().eps[u]};
}

unsigned delta_level_for(uint64_t width) {
  const uint64_t* d = delta_table();
  for (unsigned lvl = 1; lvl < kDeltaTableSize; ++lvl)
    if (d[lvl] >= width) return lvl;
  throw std::out_of_range("delta_level_for: width too large");
}

}  // namespace logdepth
