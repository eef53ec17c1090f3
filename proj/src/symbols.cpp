#include "logdepth/symbols.hpp"

#include <stdexcept>

namespace logdepth {

uint8_t binary_truth_table(uint8_t code) {
  static constexpr uint8_t tables[10] = {1, 2, 4, 6, 7, 8, 9, 11, 13, 14};
  if (!sym_is_binary(code)) throw std::invalid_argument("not a binary connective");
  return tables[code - sym::nor_];
}

bool apply_binary(uint8_t code, bool a, bool b) {
  return (binary_truth_table(code) >> (2 * int(a) + int(b))) & 1;
}

uint8_t transpose_binary(uint8_t code) {
  switch (code) {
    case sym::rnimp: return sym::nimp;
    case sym::nimp: return sym::rnimp;
    case sym::imp: return sym::rimp;
    case sym::rimp: return sym::imp;
    default: return code;  // the other six are symmetric
  }
}

const char* sym_glyph(uint8_t code) {
  switch (code) {
    case sym::var_p: return "p";
    case sym::digit0: return "0";
    case sym::digit1: return "1";
    case sym::lparen: return "(";
    case sym::rparen: return ")";
    case sym::comma: return ",";
    case sym::top: return "T";
    case sym::bot: return "F";
    case sym::neg: return "!";
    case sym::nor_: return "!|";
    case sym::rnimp: return "<!";
    case sym::nimp: return "!>";
    case sym::xor_: return "^";
    case sym::nand_: return "!&";
    case sym::and_: return "&";
    case sym::iff: return "<->";
    case sym::imp: return "->";
    case sym::rimp: return "<-";
    case sym::or_: return "|";
  }
  return "?";
}

std::string SymbolWord::display() const {
  std::string out;
  for (size_t i = 0; i < syms.size(); ++i) {
    if (i && !sym_is_digit(syms[i])) out += ' ';
    out += sym_glyph(syms[i]);
  }
  return out;
}

Nat pack_symbols(const SymbolWord& w) {
  std::vector<uint64_t> limbs((5 * w.syms.size() + 63) / 64 + 1, 0);
  for (size_t j = 0; j < w.syms.size(); ++j) {
    uint64_t pos = 5 * j;
    limbs[pos / 64] |= uint64_t(w.syms[j]) << (pos % 64);
    if (pos % 64 > 59) limbs[pos / 64 + 1] |= uint64_t(w.syms[j]) >> (64 - pos % 64);
  }
  return Nat::from_limbs(std::move(limbs));
}

SymbolWord unpack_symbols(const Nat& packed) {
  SymbolWord w;
  if (packed.is_zero()) return w;
  uint64_t n = (packed.length() + 4) / 5;
  w.syms.resize(n);
  for (uint64_t j = 0; j < n; ++j) {
    uint8_t c = 0;
    for (int b = 0; b < 5; ++b) c |= uint8_t(packed.bit(5 * j + uint64_t(b))) << b;
    if (c == 0 || c >= sym::count)
      throw std::invalid_argument("unpack_symbols: invalid 5-bit code");
    w.syms[j] = c;
  }
  return w;
}

std::string symbols_to_hex(const SymbolWord& w) { return pack_symbols(w).to_hex(); }

SymbolWord symbols_from_hex(const std::string& hex) {
  return unpack_symbols(Nat::from_hex(hex));
}

}  // namespace logdepth
