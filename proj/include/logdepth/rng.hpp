#pragma once

#include <cstdint>

namespace logdepth {

// splitmix64: tiny, fully specified generator so that identical seeds give
// byte-identical behaviour on every platform (std:: distributions do not).
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0
  uint64_t below(uint64_t n) {
    // rejection-free modulo is fine here; bias is < 2^-53 for test-sized n
    return next() % n;
  }

  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return next() & 1; }
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

private:
  uint64_t state_;
};

}  // namespace logdepth
