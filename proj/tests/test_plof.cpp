#include "doctest.h"
#include "logdepth/balanced.hpp"
#include "logdepth/gen.hpp"

using namespace logdepth;

TEST_CASE("parse infix") {
  AstArena a;
  int32_t r = parse_infix("(p0 & p1)", a);
  CHECK(a[r].kind == AstNode::K::Bin);
  CHECK(a[r].conn == sym::and_);
  CHECK(a[a[r].a].var == 0);
  CHECK(a[a[r].b].var == 1);

  int32_t n = parse_infix("!T", a);
  CHECK(a[n].kind == AstNode::K::Not);
  CHECK(a[a[n].a].kind == AstNode::K::Top);

  CHECK_THROWS_AS(parse_infix("(p0 &", a), ParseError);
  try {
    parse_infix("(p0 &", a);
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
}

TEST_CASE("to_plof basics") {
  AstArena a;
  // equal lengths keep left-then-right order
  int32_t r = a.bin(sym::and_, a.var(0), a.var(1));
  SymbolWord w = to_plof(a, r);
  CHECK(w.display() == "p0 p1 &");

  // longer operand first: p0 & (p1 | p2) emits the disjunction first
  int32_t r2 = a.bin(sym::and_, a.var(0), a.bin(sym::or_, a.var(1), a.var(2)));
  SymbolWord w2 = to_plof(a, r2);
  CHECK(w2.display() == "p1 p10 | p0 &");  // p2 prints its binary digits

  // asymmetric connective emitted swapped becomes its transpose
  int32_t r3 = a.bin(sym::imp, a.var(0), a.bin(sym::or_, a.var(1), a.var(2)));
  SymbolWord w3 = to_plof(a, r3);
  CHECK(w3.syms.back() == sym::rimp);
  AstArena b;
  CHECK(ast_equal(a, r3, b, decode_plof(w3, b)));
}

TEST_CASE("is_postfix_formula") {
  AstArena a;
  Rng rng(31);
  for (int it = 0; it < 1000; ++it) {
    int32_t r = random_ast(a, rng, 1 + uint32_t(rng.below(60)), 6);
    CHECK(is_postfix_formula(to_plof(a, r)));
    a.clear();
  }
  SymbolWord prefix;  // "& p0 p1" in prefix order is not postfix
  prefix.syms = {sym::and_, sym::var_p, sym::digit0, sym::var_p, sym::digit1};
  CHECK_FALSE(is_postfix_formula(prefix));
  CHECK_FALSE(is_postfix_formula(SymbolWord{}));
}

TEST_CASE("plof preserves evaluation and structure") {
  AstArena a;
  Rng rng(37);
  for (int it = 0; it < 2000; ++it) {
    int32_t r = random_ast(a, rng, 1 + uint32_t(rng.below(120)), 8);
    Valuation sigma = random_valuation(rng, 8);
    SymbolWord w = to_plof(a, r);
    CHECK(naive_eval(a, r, sigma) == naive_eval(w, sigma));
    FormulaIndex ix(w);
    CHECK(ix.is_plof());
    a.clear();
  }
}

TEST_CASE("pack round trip") {
  AstArena a;
  Rng rng(41);
  for (int it = 0; it < 300; ++it) {
    int32_t r = random_ast(a, rng, 1 + uint32_t(rng.below(40)), 40);
    SymbolWord w = to_plof(a, r);
    CHECK(unpack_symbols(pack_symbols(w)).syms == w.syms);
    CHECK(symbols_from_hex(symbols_to_hex(w)).syms == w.syms);
    a.clear();
  }
}

TEST_CASE("de morgan agreement") {
  AstArena a;
  Rng rng(43);
  for (int it = 0; it < 1000; ++it) {
    int32_t x = random_ast(a, rng, 1 + uint32_t(rng.below(20)), 4);
    int32_t y = random_ast(a, rng, 1 + uint32_t(rng.below(20)), 4);
    Valuation sigma = random_valuation(rng, 4);
    int32_t lhs = a.neg(a.bin(sym::and_, x, y));
    int32_t rhs = a.bin(sym::or_, a.neg(x), a.neg(y));
    CHECK(naive_eval(a, lhs, sigma) == naive_eval(a, rhs, sigma));
    a.clear();
  }
}
