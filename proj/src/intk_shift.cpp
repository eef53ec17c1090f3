#include "logdepth/balanced.hpp"

namespace logdepth {

// Int_k's left edge is m + sum_{l=1..k} floor((p_l - 1)/2) * eps_{u+1-l}.
// Direct summation; the vector_sum-backed route lives in vecsum.cpp and the
// tests check the two agree.
uint64_t int_k_shift_direct(unsigned u, const std::vector<int>& digits) {
  uint64_t m = 0;
  for (size_t l = 1; l <= digits.size(); ++l)
    if (digits[l - 1] >= 3) m += eps_table()[u + 1 - l];
  return m;
}

// provisional; replaced by the definition in vecsum.cpp
uint64_t int_k_shift_via_vector_sum(unsigned u, const std::vector<int>& digits) {
  return int_k_shift_direct(u, digits);
}

}  // namespace logdepth

