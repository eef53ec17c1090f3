#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logdepth/nat.hpp"

namespace logdepth {

// 5-bit symbol codes. 19 symbols; code 0 is unused so the packed word never
// has a zero top symbol. The ten binary connectives sit at 10..19 ordered by
// their truth tables (bit 2a+b of the table is the value at (a, b), a the
// first-emitted operand): 1, 2, 4, 6, 7, 8, 9, 11, 13, 14.
namespace sym {
inline constexpr uint8_t var_p = 1;
inline constexpr uint8_t digit0 = 2;
inline constexpr uint8_t digit1 = 3;
inline constexpr uint8_t lparen = 4;
inline constexpr uint8_t rparen = 5;
inline constexpr uint8_t comma = 6;
inline constexpr uint8_t top = 7;
inline constexpr uint8_t bot = 8;
inline constexpr uint8_t neg = 9;
inline constexpr uint8_t nor_ = 10;     // table 0001
inline constexpr uint8_t rnimp = 11;    // table 0010, !a & b
inline constexpr uint8_t nimp = 12;     // table 0100, a & !b
inline constexpr uint8_t xor_ = 13;     // table 0110
inline constexpr uint8_t nand_ = 14;    // table 0111
inline constexpr uint8_t and_ = 15;     // table 1000
inline constexpr uint8_t iff = 16;      // table 1001
inline constexpr uint8_t imp = 17;      // table 1011
inline constexpr uint8_t rimp = 18;     // table 1101, a | !b
inline constexpr uint8_t or_ = 19;      // table 1110
inline constexpr uint8_t count = 20;    // codes are 1..19
}  // namespace sym

inline bool sym_is_digit(uint8_t c) { return c == sym::digit0 || c == sym::digit1; }
inline bool sym_is_binary(uint8_t c) { return c >= sym::nor_ && c <= sym::or_; }
inline bool sym_is_atomic(uint8_t c) {
  return c == sym::var_p || c == sym::top || c == sym::bot;
}

uint8_t binary_truth_table(uint8_t code);           // 4-bit table
bool apply_binary(uint8_t code, bool a, bool b);    // a = first-emitted operand
uint8_t transpose_binary(uint8_t code);             // code with operands swapped
const char* sym_glyph(uint8_t code);                // display name

// A formula (or proof) coded as a sequence of 5-bit symbols. Symbol j
// (1-based) occupies bits [5(j-1), 5j) of the packed number, so the first
// symbol sits at the low end.
struct SymbolWord {
  std::vector<uint8_t> syms;

  size_t size() const { return syms.size(); }
  bool empty() const { return syms.empty(); }
  std::string display() const;
};

Nat pack_symbols(const SymbolWord& w);
SymbolWord unpack_symbols(const Nat& packed);  // throws on invalid codes

std::string symbols_to_hex(const SymbolWord& w);
SymbolWord symbols_from_hex(const std::string& hex);

}  // namespace logdepth
