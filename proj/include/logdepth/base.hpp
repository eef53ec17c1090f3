#pragma once

#include <span>
#include <string_view>

#include "logdepth/nat.hpp"

namespace logdepth {

// The base-language function constants, plus Bit and multi which are
// definable from them.
enum class BaseFn { bit, length, part, monus, half, add, pad, smash, multi };

BaseFn base_fn_from_name(std::string_view name);
std::string_view base_fn_name(BaseFn fn);
int base_fn_arity(BaseFn fn);

// Guard for smash/pad results; exceeding it throws std::length_error.
inline constexpr uint64_t kMaxResultBits = uint64_t{1} << 26;

// All functions are total; preconditions out of range give the value the
// definitions assign (0 for part with j <= i, 0 for monus with x <= y, ...).
Nat eval_base(BaseFn fn, std::span<const Nat> args);

// Word coding [w] = 1w. Concatenation x * y = x * 2^(|y|-1) + y[0, |y|-1).
// x and y must both be coded words (>= 1).
Nat concat_word(const Nat& x, const Nat& y);

// s_i x = 2x + i.
inline Nat clock_child(const Nat& p, int i) {
  Nat c = p.shl(1);
  if (i) c.set_bit(0, true);
  return c;
}

}  // namespace logdepth
