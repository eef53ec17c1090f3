#include "logdepth/base.hpp"

#include <stdexcept>

namespace logdepth {

BaseFn base_fn_from_name(std::string_view name) {
  if (name == "bit") return BaseFn::bit;
  if (name == "length") return BaseFn::length;
  if (name == "part") return BaseFn::part;
  if (name == "monus") return BaseFn::monus;
  if (name == "half") return BaseFn::half;
  if (name == "add") return BaseFn::add;
  if (name == "pad") return BaseFn::pad;
  if (name == "smash") return BaseFn::smash;
  if (name == "multi") return BaseFn::multi;
  throw std::invalid_argument("unknown base function: " + std::string(name));
}

std::string_view base_fn_name(BaseFn fn) {
  switch (fn) {
    case BaseFn::bit: return "bit";
    case BaseFn::length: return "length";
    case BaseFn::part: return "part";
    case BaseFn::monus: return "monus";
    case BaseFn::half: return "half";
    case BaseFn::add: return "add";
    case BaseFn::pad: return "pad";
    case BaseFn::smash: return "smash";
    case BaseFn::multi: return "multi";
  }
  return "";
}

int base_fn_arity(BaseFn fn) {
  switch (fn) {
    case BaseFn::bit: return 2;
    case BaseFn::length: return 1;
    case BaseFn::part: return 3;
    case BaseFn::monus: return 2;
    case BaseFn::half: return 1;
    case BaseFn::add: return 2;
    case BaseFn::pad: return 2;
    case BaseFn::smash: return 2;
    case BaseFn::multi: return 4;
  }
  return 0;
}

static uint64_t index_arg(const Nat& n) {
  // part/bit indices beyond any representable length behave like "past the
  // end"; clamp instead of throwing so the functions stay total.
  return n.fits_u64() ? n.to_u64() : ~uint64_t{0};
}

Nat eval_base(BaseFn fn, std::span<const Nat> args) {
  if (int(args.size()) != base_fn_arity(fn))
    throw std::invalid_argument("eval_base: arity mismatch");
  switch (fn) {
    case BaseFn::bit:
      return Nat(args[1].bit(index_arg(args[0])) ? 1 : 0);
    case BaseFn::length:
      return Nat(args[0].length());
    case BaseFn::part:
      return args[0].part(index_arg(args[1]), index_arg(args[2]));
    case BaseFn::monus:
      return args[0].monus(args[1]);
    case BaseFn::half:
      return args[0].half();
    case BaseFn::add:
      return args[0] + args[1];
    case BaseFn::pad:
      if (args[0].length() + args[1].length() > kMaxResultBits)
        throw std::length_error("pad: result exceeds bit budget");
      return args[0].shl(args[1].length());
    case BaseFn::smash: {
      unsigned __int128 e =
          (unsigned __int128)args[0].length() * args[1].length();
      if (e > kMaxResultBits) throw std::length_error("smash: result exceeds bit budget");
      return Nat::power_of_two(uint64_t(e));
    }
    case BaseFn::multi: {
      const Nat &i = args[0], &j = args[1], &x = args[2], &y = args[3];
      if (i > Nat(x.length()) || j > Nat(y.length())) return Nat();
      return Nat::from_u128((unsigned __int128)i.to_u64() * j.to_u64());
    }
  }
  return Nat();
}

Nat concat_word(const Nat& x, const Nat& y) {
  if (x.is_zero() || y.is_zero())
    throw std::invalid_argument("concat_word: arguments must be coded words (>= 1)");
  return x.shl(y.length() - 1) + y.part(0, y.length() - 1);
}

}  // namespace logdepth
