#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "logdepth/ast.hpp"
#include "logdepth/delta.hpp"
#include "logdepth/symbols.hpp"

namespace logdepth {

// Value of a <=1-scarred formula interval as a function of the scar's truth
// value: (value when the scar is true, value when the scar is false).
// Unscarred intervals have both components equal; the empty interval is the
// composition identity (true, false).
struct TruthPair {
  bool v_top = true;
  bool v_bot = false;

  static TruthPair identity() { return {true, false}; }
  static TruthPair constant(bool b) { return {b, b}; }
  bool at(bool scar) const { return scar ? v_top : v_bot; }
  bool is_constant() const { return v_top == v_bot; }
  bool operator==(const TruthPair&) const = default;
};

// reverse composition: apply s, then t
inline TruthPair compose(TruthPair s, TruthPair t) {
  return {t.at(s.v_top), t.at(s.v_bot)};
}

inline TruthPair apply_binop_pair(uint8_t conn, TruthPair s, TruthPair t) {
  return {apply_binary(conn, s.v_top, t.v_top), apply_binary(conn, s.v_bot, t.v_bot)};
}

// Closed interval of logical-symbol indices; lo > hi encodes the empty
// (undefined) interval.
struct Interval {
  uint64_t lo = 1;
  uint64_t hi = 0;
  bool empty() const { return lo > hi; }
  bool operator==(const Interval&) const = default;
};

// Half-open window (lo, hi] of Delta-width used to steer the splitting.
struct Window {
  uint64_t lo = 0;
  uint64_t hi = 0;
  uint64_t width() const { return hi - lo; }
  bool operator==(const Window&) const = default;
};

struct Breakpoints {
  uint64_t a1, a2, a3, a4;
};

// Per-formula index: logical symbols, subformula starts and the search
// structure behind breakpoint selection.
class FormulaIndex {
public:
  explicit FormulaIndex(const SymbolWord& w);  // throws if not a postfix formula

  uint64_t lsyms() const { return uint64_t(kind_.size()); }
  uint8_t code_at(uint64_t j) const { return kind_[j - 1]; }  // 1-based
  uint64_t var_at(uint64_t j) const { return var_[j - 1]; }
  uint64_t sub_start(uint64_t j) const { return start_[j - 1]; }

  Interval subformula_at(uint64_t j) const { return {sub_start(j), j}; }
  bool in_rel(uint64_t j, uint64_t i) const;  // j is in x_i
  uint64_t lca(uint64_t j, uint64_t i) const;

  // max {k <= min(r, j)} such that x[l+1] or x[i] is in x_k; 0 if none
  uint64_t breakpoint_1selected(Interval fml, uint64_t l, uint64_t r) const;
  Breakpoints breakpoints(Interval fml, Window win) const;

  // each binary node emits its longer operand first
  bool is_plof() const;

private:
  uint64_t max_k_le(uint64_t k_hi, uint64_t bound) const;   // max k<=k_hi, start[k]<=bound
  uint64_t min_k_ge(uint64_t k_lo, uint64_t bound) const;   // min k>=k_lo, start[k]<=bound

  std::vector<uint8_t> kind_;     // logical symbol codes
  std::vector<uint64_t> var_;     // variable index for var symbols
  std::vector<uint32_t> start_;   // subformula start per position (1-based values)
  std::vector<uint32_t> seg_;     // segment tree of min(start) per range
  uint64_t seg_leaves_ = 0;
};

struct EvalStats {
  unsigned max_depth = 0;   // deepest value_k level reached
  uint64_t nodes = 0;
};

struct BalancedOptions {
  // return the single-symbol pair as soon as a piece shrinks to one
  // non-binary symbol instead of splitting all the way down
  bool singleton_cutoff = true;
};

// Value_k for the piece SubFm_k described by (fml, win, digits), driven from
// the top as value_0 of fml within win. win.width() must be Delta_{u+1} with
// win.lo < fml.lo <= fml.hi <= win.hi.
TruthPair value_0(const FormulaIndex& ix, Interval fml, Window win, const Valuation& sigma,
                  EvalStats* stats = nullptr, const BalancedOptions& opt = {});

// canonical window (fml.lo - 1, fml.lo - 1 + Delta_{u+1}] for the least
// admissible u
Window canonical_window(Interval fml);

bool true_plof(const SymbolWord& w, const Valuation& sigma, EvalStats* stats = nullptr,
               const BalancedOptions& opt = {});

// Int_k window arithmetic, the k-fold splitting and the level windows.
// digits entries are 1..4.
Window int_k(Window win, const std::vector<int>& digits);
Interval subfm_k(const FormulaIndex& ix, Interval fml, Window win,
                 const std::vector<int>& digits);

// Window shift per digit. The direct sum is the oracle; the public int_k
// routes through the carry-save vector_sum path (defined next to vector_sum).
uint64_t int_k_shift_direct(unsigned u, const std::vector<int>& digits);
uint64_t int_k_shift_via_vector_sum(unsigned u, const std::vector<int>& digits);

// Stack oracle: evaluate an interval by direct simulation, tracking the scar
// slot; nullopt if the interval is not a <=1-scarred formula.
std::optional<TruthPair> pair_oracle(const FormulaIndex& ix, Interval fml,
                                     const Valuation& sigma);

}  // namespace logdepth
