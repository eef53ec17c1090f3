#include "doctest.h"
#include "logdepth/balanced.hpp"
#include "logdepth/gen.hpp"

using namespace logdepth;

namespace {
SymbolWord word_of(const char* infix) {
  AstArena a;
  return to_plof(a, parse_infix(infix, a));
}
}  // namespace

TEST_CASE("delta schedule") {
  auto [d0, e0] = delta_eps(0);
  CHECK(d0 == 2);
  CHECK(e0 == 1);
  CHECK(delta_eps(1).first == 3);
  CHECK(delta_eps(2).first == 4);
  CHECK(delta_eps(3).first == 6);
  CHECK(delta_eps(4).first == 9);
  // Delta_u < (3/2)^{u+2}, checked exactly: Delta_u * 2^{u+2} < 3^{u+2}
  unsigned __int128 pow3 = 9;  // 3^(u+2) for u = 0
  for (unsigned u = 0; u <= 64; ++u) {
    unsigned __int128 lhs = (unsigned __int128)delta_table()[u] << (u + 2);
    CHECK(lhs < pow3);
    pow3 *= 3;
  }
}

TEST_CASE("subformula and lca") {
  SymbolWord w = word_of("(p0 & p1) | p2");  // postfix: p0 p1 & p2 |
  FormulaIndex ix(w);
  REQUIRE(ix.lsyms() == 5);
  CHECK(ix.subformula_at(3) == Interval{1, 3});
  CHECK(ix.subformula_at(2) == Interval{2, 2});
  CHECK(ix.lca(1, 4) == 5);
  CHECK(ix.in_rel(1, 3));
  CHECK_FALSE(ix.in_rel(1, 2));
  for (uint64_t j = 1; j <= 5; ++j) CHECK(ix.in_rel(j, j));
}

TEST_CASE("subformula self check") {
  AstArena a;
  Rng rng(47);
  for (int it = 0; it < 200; ++it) {
    int32_t r = random_ast(a, rng, 1 + uint32_t(rng.below(80)), 6);
    SymbolWord w = to_plof(a, r);
    FormulaIndex ix(w);
    for (uint64_t j = 1; j <= ix.lsyms(); ++j) {
      Interval s = ix.subformula_at(j);
      // the subformula interval is itself a postfix formula
      SymbolWord sub;
      for (uint64_t k = s.lo; k <= s.hi; ++k) {
        sub.syms.push_back(ix.code_at(k));
        if (ix.code_at(k) == sym::var_p) sub.syms.push_back(sym::digit0);
      }
      CHECK(is_postfix_formula(sub));
      // a [= b implies a <= b
      for (uint64_t i = 1; i <= ix.lsyms(); ++i)
        if (ix.in_rel(i, j)) CHECK(i <= j);
    }
    a.clear();
  }
}

TEST_CASE("true_plof matches naive on small formulas") {
  AstArena a;
  Rng rng(53);
  for (int it = 0; it < 4000; ++it) {
    uint32_t n = 1 + uint32_t(rng.below(40));
    int32_t r = random_ast(a, rng, n, 5);
    Valuation sigma = random_valuation(rng, 5);
    SymbolWord w = to_plof(a, r);
    bool expect = naive_eval(w, sigma);
    CAPTURE(w.display());
    bool got = true_plof(w, sigma);
    CHECK(got == expect);
    a.clear();
  }
}

TEST_CASE("true_plof matches naive on medium formulas") {
  AstArena a;
  Rng rng(59);
  for (int it = 0; it < 300; ++it) {
    uint32_t n = 1 + uint32_t(rng.below(2000));
    int32_t r = random_ast(a, rng, n, 12);
    Valuation sigma = random_valuation(rng, 12);
    SymbolWord w = to_plof(a, r);
    CHECK(true_plof(w, sigma) == naive_eval(w, sigma));
    a.clear();
  }
}

TEST_CASE("singleton cutoff is extensionally invisible") {
  AstArena a;
  Rng rng(61);
  BalancedOptions with, without;
  without.singleton_cutoff = false;
  for (int it = 0; it < 800; ++it) {
    uint32_t n = 1 + uint32_t(rng.below(24));
    int32_t r = random_ast(a, rng, n, 4);
    Valuation sigma = random_valuation(rng, 4);
    SymbolWord w = to_plof(a, r);
    CHECK(true_plof(w, sigma, nullptr, with) == true_plof(w, sigma, nullptr, without));
    a.clear();
  }
}

TEST_CASE("window independence") {
  AstArena a;
  Rng rng(67);
  for (int it = 0; it < 500; ++it) {
    uint32_t n = 1 + uint32_t(rng.below(200));
    int32_t r = random_ast(a, rng, n, 6);
    Valuation sigma = random_valuation(rng, 6);
    SymbolWord w = to_plof(a, r);
    FormulaIndex ix(w);
    Interval fml{1, ix.lsyms()};
    TruthPair v1 = value_0(ix, fml, canonical_window(fml), sigma);
    // a wider window with a shifted base
    unsigned lvl = delta_level_for(fml.hi - fml.lo + 1) + 1 + unsigned(rng.below(2));
    Window win2{0, delta_table()[lvl]};
    TruthPair v2 = value_0(ix, fml, win2, sigma);
    CHECK(v1 == v2);
    a.clear();
  }
}

TEST_CASE("recursion depth bound") {
  AstArena a;
  Rng rng(71);
  for (int it = 0; it < 200; ++it) {
    uint32_t n = 1 + uint32_t(rng.below(1 << 10));
    int32_t r = random_ast(a, rng, n, 6);
    Valuation sigma = random_valuation(rng, 6);
    SymbolWord w = to_plof(a, r);
    EvalStats st;
    true_plof(w, sigma, &st);
    FormulaIndex ix(w);
    CHECK(st.max_depth <= delta_level_for(ix.lsyms()) + 1);
    a.clear();
  }
}

TEST_CASE("breakpoint selected range") {
  AstArena a;
  Rng rng(73);
  for (int it = 0; it < 400; ++it) {
    uint32_t n = 2 + uint32_t(rng.below(60));
    int32_t root = random_ast(a, rng, n, 5);
    SymbolWord w = to_plof(a, root);
    FormulaIndex ix(w);
    Interval fml{1, ix.lsyms()};
    uint64_t l = rng.below(fml.hi);               // l < j
    uint64_t r = l + 1 + rng.below(fml.hi - l);   // l < r
    if (fml.lo > r) continue;                     // need i <= r
    uint64_t k = ix.breakpoint_1selected(fml, l, r);
    CHECK(k >= fml.lo);
    CHECK(k <= std::min(r, fml.hi));
    a.clear();
  }
  // single-atom formula: the breakpoint is i
  SymbolWord atom = word_of("p0");
  FormulaIndex ix(atom);
  CHECK(ix.breakpoint_1selected({1, 1}, 0, 2) == 1);
}
