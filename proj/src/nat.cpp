#include "logdepth/nat.hpp"

#include <bit>
#include <stdexcept>

namespace logdepth {

void Nat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Nat Nat::from_limbs(std::vector<uint64_t> limbs) {
  Nat n;
  n.limbs_ = std::move(limbs);
  n.trim();
  return n;
}

Nat Nat::power_of_two(uint64_t e) {
  Nat n;
  n.limbs_.assign(e / 64 + 1, 0);
  n.limbs_.back() = uint64_t{1} << (e % 64);
  return n;
}

Nat Nat::ones(uint64_t n) {
  Nat r;
  if (n == 0) return r;
  r.limbs_.assign((n + 63) / 64, ~uint64_t{0});
  if (n % 64) r.limbs_.back() = (~uint64_t{0}) >> (64 - n % 64);
  return r;
}

Nat Nat::from_binary(std::string_view s) {
  Nat r;
  uint64_t n = s.size();
  for (uint64_t i = 0; i < n; ++i) {
    char c = s[n - 1 - i];
    if (c == '1')
      r.set_bit(i, true);
    else if (c != '0')
      throw std::invalid_argument("Nat::from_binary: bad digit");
  }
  return r;
}

Nat Nat::from_hex(std::string_view s) {
  Nat r;
  uint64_t n = s.size();
  for (uint64_t i = 0; i < n; ++i) {
    char c = s[n - 1 - i];
    uint64_t v;
    if (c >= '0' && c <= '9')
      v = uint64_t(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = uint64_t(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v = uint64_t(c - 'A' + 10);
    else
      throw std::invalid_argument("Nat::from_hex: bad digit");
    uint64_t pos = 4 * i;
    if (v) {
      if (r.limbs_.size() <= pos / 64 + 1) r.limbs_.resize(pos / 64 + 1, 0);
      r.limbs_[pos / 64] |= v << (pos % 64);
      if (pos % 64 > 60 && (v >> (64 - pos % 64)))
        r.limbs_.push_back(v >> (64 - pos % 64));  // unreachable: pos%64 is a multiple of 4
    }
  }
  r.trim();
  return r;
}

Nat Nat::from_u128(unsigned __int128 v) {
  Nat r;
  r.limbs_.push_back(uint64_t(v));
  r.limbs_.push_back(uint64_t(v >> 64));
  r.trim();
  return r;
}

uint64_t Nat::length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + (64 - uint64_t(std::countl_zero(limbs_.back())));
}

bool Nat::bit(uint64_t i) const {
  uint64_t w = i / 64;
  if (w >= limbs_.size()) return false;
  return (limbs_[w] >> (i % 64)) & 1;
}

void Nat::set_bit(uint64_t i, bool v) {
  uint64_t w = i / 64;
  if (v) {
    if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
    limbs_[w] |= uint64_t{1} << (i % 64);
  } else if (w < limbs_.size()) {
    limbs_[w] &= ~(uint64_t{1} << (i % 64));
    trim();
  }
}

uint64_t Nat::popcount() const {
  uint64_t c = 0;
  for (uint64_t w : limbs_) c += uint64_t(std::popcount(w));
  return c;
}

uint64_t Nat::to_u64() const {
  if (limbs_.empty()) return 0;
  if (limbs_.size() > 1) throw std::overflow_error("Nat::to_u64: value too wide");
  return limbs_[0];
}

Nat Nat::operator+(const Nat& o) const {
  const auto& a = limbs_;
  const auto& b = o.limbs_;
  Nat r;
  r.limbs_.resize(std::max(a.size(), b.size()) + 1, 0);
  unsigned __int128 carry = 0;
  for (size_t i = 0; i < r.limbs_.size(); ++i) {
    unsigned __int128 s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.limbs_[i] = uint64_t(s);
    carry = s >> 64;
  }
  r.trim();
  return r;
}

Nat Nat::monus(const Nat& o) const {
  if (*this <= o) return Nat();
  Nat r;
  r.limbs_.resize(limbs_.size(), 0);
  uint64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t bi = i < o.limbs_.size() ? o.limbs_[i] : 0;
    uint64_t ai = limbs_[i];
    uint64_t d = ai - bi - borrow;
    borrow = (ai < bi + borrow) || (bi == ~uint64_t{0} && borrow) ? 1 : 0;
    r.limbs_[i] = d;
  }
  r.trim();
  return r;
}

Nat Nat::shl(uint64_t k) const {
  if (is_zero()) return Nat();
  uint64_t words = k / 64, bits = k % 64;
  Nat r;
  r.limbs_.assign(limbs_.size() + words + 1, 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    r.limbs_[i + words] |= limbs_[i] << bits;
    if (bits) r.limbs_[i + words + 1] |= limbs_[i] >> (64 - bits);
  }
  r.trim();
  return r;
}

Nat Nat::shr(uint64_t k) const {
  uint64_t words = k / 64, bits = k % 64;
  if (words >= limbs_.size()) return Nat();
  Nat r;
  r.limbs_.assign(limbs_.size() - words, 0);
  for (size_t i = words; i < limbs_.size(); ++i) {
    r.limbs_[i - words] |= limbs_[i] >> bits;
    if (bits && i + 1 < limbs_.size()) r.limbs_[i - words] |= limbs_[i + 1] << (64 - bits);
  }
  r.trim();
  return r;
}

Nat Nat::part(uint64_t i, uint64_t j) const {
  if (j <= i) return Nat();
  Nat r = shr(i);
  uint64_t width = j - i;
  if (r.length() <= width) return r;
  r.limbs_.resize((width + 63) / 64);
  if (width % 64) r.limbs_.back() &= (~uint64_t{0}) >> (64 - width % 64);
  r.trim();
  return r;
}

std::strong_ordering Nat::operator<=>(const Nat& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  return std::strong_ordering::equal;
}

std::string Nat::to_binary() const {
  if (is_zero()) return "0";
  uint64_t n = length();
  std::string s(n, '0');
  for (uint64_t i = 0; i < n; ++i)
    if (bit(i)) s[n - 1 - i] = '1';
  return s;
}

std::string Nat::to_hex() const {
  if (is_zero()) return "0";
  uint64_t digits = (length() + 3) / 4;
  std::string s(digits, '0');
  static const char* hexd = "0123456789abcdef";
  for (uint64_t d = 0; d < digits; ++d) {
    uint64_t v = 0;
    for (int b = 3; b >= 0; --b) v = (v << 1) | uint64_t(bit(4 * d + uint64_t(b)));
    s[digits - 1 - d] = hexd[v];
  }
  return s;
}

uint64_t bit_length_u64(uint64_t v) { return 64 - uint64_t(std::countl_zero(v)); }

uint64_t len2(const Nat& x) { return bit_length_u64(x.length()); }

}  // namespace logdepth
