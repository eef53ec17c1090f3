#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logdepth {

// Arbitrary-length natural number viewed as a little-endian bit string.
// Bit 0 is the least significant digit; there is no stored leading zero,
// so length() is the position of the highest 1-bit plus one and
// length(0) == 0.
class Nat {
public:
  Nat() = default;
  Nat(uint64_t v) {
    if (v) limbs_.push_back(v);
  }

  static Nat power_of_two(uint64_t e);
  static Nat ones(uint64_t n);  // 2^n - 1
  static Nat from_binary(std::string_view msb_first);
  static Nat from_hex(std::string_view msb_first);
  static Nat from_u128(unsigned __int128 v);

  bool is_zero() const { return limbs_.empty(); }
  uint64_t length() const;  // |x|
  bool bit(uint64_t i) const;
  void set_bit(uint64_t i, bool v);
  uint64_t popcount() const;

  bool fits_u64() const { return limbs_.size() <= 1; }
  uint64_t to_u64() const;  // throws std::overflow_error if too wide

  Nat operator+(const Nat& o) const;
  Nat monus(const Nat& o) const;  // max(x - y, 0)
  Nat half() const { return shr(1); }
  Nat shl(uint64_t k) const;  // x * 2^k
  Nat shr(uint64_t k) const;
  Nat part(uint64_t i, uint64_t j) const;  // x[i, j): bits i .. j-1

  std::strong_ordering operator<=>(const Nat& o) const;
  bool operator==(const Nat& o) const { return limbs_ == o.limbs_; }

  std::string to_binary() const;  // msb first, "0" for zero
  std::string to_hex() const;     // msb first, lowercase, "0" for zero

  const std::vector<uint64_t>& limbs() const { return limbs_; }
  static Nat from_limbs(std::vector<uint64_t> limbs);

private:
  void trim();
  std::vector<uint64_t> limbs_;  // little-endian, canonical
};

// |x| of |x|; the paper's double length.
uint64_t len2(const Nat& x);
uint64_t bit_length_u64(uint64_t v);

}  // namespace logdepth
