#include "logdepth/balanced.hpp"

#include <stdexcept>

namespace logdepth {

FormulaIndex::FormulaIndex(const SymbolWord& w) {
  if (!is_postfix_formula(w)) throw std::invalid_argument("not a postfix formula");
  const size_t n = w.syms.size();
  size_t i = 0;
  std::vector<uint32_t> stack;
  while (i < n) {
    uint8_t c = w.syms[i];
    uint64_t var = 0;
    if (c == sym::var_p) {
      size_t j = i + 1;
      while (j < n && sym_is_digit(w.syms[j])) {
        if (j - i > 64) throw std::invalid_argument("variable index too long");
        var = (var << 1) | uint64_t(w.syms[j] == sym::digit1);
        ++j;
      }
      i = j;
    } else {
      ++i;
    }
    kind_.push_back(c);
    var_.push_back(var);
    uint32_t pos = uint32_t(kind_.size());  // 1-based
    if (sym_is_atomic(c)) {
      stack.push_back(pos);
    } else if (c == sym::neg) {
      // start unchanged
    } else {  // binary: operands are the two topmost subformulas
      stack.pop_back();
    }
    start_.push_back(stack.back());
  }

  seg_leaves_ = 1;
  while (seg_leaves_ < start_.size()) seg_leaves_ <<= 1;
  seg_.assign(2 * seg_leaves_, ~uint32_t{0});
  for (size_t k = 0; k < start_.size(); ++k) seg_[seg_leaves_ + k] = start_[k];
  for (size_t k = seg_leaves_; k-- > 1;) seg_[k] = std::min(seg_[2 * k], seg_[2 * k + 1]);
}

bool FormulaIndex::in_rel(uint64_t j, uint64_t i) const {
  return i >= 1 && i <= lsyms() && sub_start(i) <= j && j <= i;
}

uint64_t FormulaIndex::max_k_le(uint64_t k_hi, uint64_t bound) const {
  if (k_hi == 0) return 0;
  if (k_hi > lsyms()) k_hi = lsyms();
  uint64_t l = seg_leaves_, r = seg_leaves_ + k_hi;
  uint64_t nodesL[64], nodesR[64];
  int nl = 0, nr = 0;
  while (l < r) {
    if (l & 1) nodesL[nl++] = l++;
    if (r & 1) nodesR[nr++] = --r;
    l >>= 1;
    r >>= 1;
  }
  uint64_t node = 0;
  for (int t = 0; t < nr && !node; ++t)
    if (seg_[nodesR[t]] <= bound) node = nodesR[t];
  for (int t = nl; t-- > 0 && !node;)
    if (seg_[nodesL[t]] <= bound) node = nodesL[t];
  if (!node) return 0;
  while (node < seg_leaves_)
    node = (seg_[2 * node + 1] <= bound) ? 2 * node + 1 : 2 * node;
  return node - seg_leaves_ + 1;
}

uint64_t FormulaIndex::min_k_ge(uint64_t k_lo, uint64_t bound) const {
  if (k_lo < 1) k_lo = 1;
  if (k_lo > lsyms()) return 0;
  uint64_t l = seg_leaves_ + k_lo - 1, r = seg_leaves_ + lsyms();
  uint64_t nodesL[64], nodesR[64];
  int nl = 0, nr = 0;
  while (l < r) {
    if (l & 1) nodesL[nl++] = l++;
    if (r & 1) nodesR[nr++] = --r;
    l >>= 1;
    r >>= 1;
  }
  uint64_t node = 0;
  for (int t = 0; t < nl && !node; ++t)
    if (seg_[nodesL[t]] <= bound) node = nodesL[t];
  for (int t = nr; t-- > 0 && !node;)
    if (seg_[nodesR[t]] <= bound) node = nodesR[t];
  if (!node) return 0;
  while (node < seg_leaves_)
    node = (seg_[2 * node] <= bound) ? 2 * node : 2 * node + 1;
  return node - seg_leaves_ + 1;
}

uint64_t FormulaIndex::lca(uint64_t j, uint64_t i) const {
  uint64_t lo = std::min(i, j), hi = std::max(i, j);
  uint64_t k = min_k_ge(hi, lo);
  if (!k) throw std::logic_error("lca: no common ancestor");
  return k;
}

uint64_t FormulaIndex::breakpoint_1selected(Interval fml, uint64_t l, uint64_t r) const {
  uint64_t cap = std::min(r, fml.hi);
  uint64_t best = 0;
  uint64_t k1 = max_k_le(cap, l + 1);
  if (k1 >= l + 1) best = k1;
  uint64_t k2 = max_k_le(cap, fml.lo);
  if (k2 >= fml.lo && k2 > best) best = k2;
  return best;
}

Breakpoints FormulaIndex::breakpoints(Interval fml, Window win) const {
  unsigned lvl = delta_level_for(win.width());
  if (delta_table()[lvl] != win.width())
    throw std::invalid_argument("breakpoints: window width is not a Delta value");
  uint64_t eps = eps_table()[lvl - 1];
  uint64_t a1 = breakpoint_1selected(fml, win.lo, win.lo + eps);
  uint64_t a2 = breakpoint_1selected(fml, win.lo + eps, win.hi - eps);
  if (!a1 || !a2) throw std::logic_error("breakpoints: empty selection");
  uint64_t a4 = lca(a1, a2);
  return {a1, a2, a4 - 1, a4};
}

bool FormulaIndex::is_plof() const {
  for (uint64_t k = 1; k <= lsyms(); ++k) {
    if (!sym_is_binary(code_at(k))) continue;
    uint64_t second_start = sub_start(k - 1);
    uint64_t first_end = second_start - 1;
    uint64_t first_start = sub_start(first_end);
    if (first_end - first_start < (k - 1) - second_start) return false;
  }
  return true;
}

namespace {

// A piece's value as a function of two pending unknowns: the chain slot
// (the value produced immediately below the piece, rebound at every
// composition step) and the enclosing interval's own scar xi, which threads
// through the whole evaluation. v[slot][xi].
struct TruthQuad {
  bool v[2][2];

  static TruthQuad constant(bool b) { return {{{b, b}, {b, b}}}; }
  static TruthQuad slot() { return {{{false, false}, {true, true}}}; }
  static TruthQuad scar_xi() { return {{{false, true}, {false, true}}}; }
};

inline TruthQuad compose_q(TruthQuad s, TruthQuad t) {
  TruthQuad r;
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x) r.v[a][x] = t.v[s.v[a][x]][x];
  return r;
}

inline TruthQuad apply_binop_q(uint8_t conn, TruthQuad l, TruthQuad r) {
  uint8_t tt = binary_truth_table(conn);
  TruthQuad out;
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x)
      out.v[a][x] = (tt >> (2 * int(l.v[a][x]) + int(r.v[a][x]))) & 1;
  return out;
}

TruthQuad symbol_quad(const FormulaIndex& ix, uint64_t pos, const Valuation& sigma) {
  uint8_t c = ix.code_at(pos);
  switch (c) {
    case sym::top: return TruthQuad::constant(true);
    case sym::bot: return TruthQuad::constant(false);
    case sym::var_p: return TruthQuad::constant(sigma(ix.var_at(pos)));
    case sym::neg: {
      TruthQuad q = TruthQuad::slot();
      for (auto& row : q.v)
        for (bool& b : row) b = !b;
      return q;
    }
    default:
      // a lone binary connective: its nearer operand is the chain slot, the
      // farther one is the interval's scar
      return apply_binop_q(c, TruthQuad::scar_xi(), TruthQuad::slot());
  }
}

struct Ctx {
  const FormulaIndex& ix;
  const Valuation& sigma;
  EvalStats* stats;
  const BalancedOptions& opt;
  Interval fml;
};

// piece is [plo+1, phi] inside window (wlo, wlo + Delta_lvl]
TruthQuad value_rec(Ctx& c, unsigned lvl, uint64_t wlo, uint64_t plo, uint64_t phi,
                    unsigned depth) {
  if (c.stats) {
    ++c.stats->nodes;
    if (depth > c.stats->max_depth) c.stats->max_depth = depth;
  }
  if (plo >= phi) return TruthQuad::slot();
  if (lvl == 0) {
    if (phi - plo != 1)
      throw std::logic_error("value_k: Case 1 piece has more than one symbol");
    return symbol_quad(c.ix, phi, c.sigma);
  }
  if (c.opt.singleton_cutoff && phi - plo == 1) return symbol_quad(c.ix, phi, c.sigma);

  const uint64_t eps = eps_table()[lvl - 1];
  const uint64_t delta = delta_table()[lvl];
  uint64_t a1 = c.ix.breakpoint_1selected(c.fml, wlo, wlo + eps);
  uint64_t a2 = c.ix.breakpoint_1selected(c.fml, wlo + eps, wlo + delta - eps);
  if (!a1 || !a2) throw std::logic_error("value_k: breakpoint selection came up empty");
  uint64_t a4 = c.ix.lca(a1, a2);
  uint64_t a3 = a4 - 1;

  const uint64_t i = c.fml.lo, j = c.fml.hi;

  // The four split pieces in string order, each clipped to the current
  // piece, plus BinOp between pieces 3 and 4 when the join sits inside it.
  // Composition follows the postfix stack: an unscarred piece pushes its
  // value, a scarred piece consumes the value below it, and the BinOp
  // connective pops its two operands. The first pop past the bottom of the
  // stack is the chain slot, the second is the scar xi.
  struct Part {
    uint64_t lo, hi;  // bounds as (lo, hi]
    uint64_t child_wlo;
  };
  const Part parts[4] = {{i - 1, a1, wlo},
                         {a1, a2, wlo},
                         {a2, a3, wlo + eps},
                         {a4, j, wlo + eps}};
  const bool apply_binop = a2 != a4 && plo < a4 && a4 <= phi;

  TruthQuad st[3];
  int sp = 0;
  int underflow = 0;
  auto pop_or_scar = [&]() {
    if (sp) return st[--sp];
    if (++underflow == 1) return TruthQuad::slot();
    if (underflow == 2) return TruthQuad::scar_xi();
    throw std::logic_error("value_k: more than two pending operands");
  };
  for (int p = 0; p < 4; ++p) {
    if (p == 3 && apply_binop) {
      uint8_t conn = c.ix.code_at(a4);
      if (!sym_is_binary(conn))
        throw std::logic_error("value_k: BinOp position is not a binary connective");
      TruthQuad right = pop_or_scar();
      TruthQuad left = pop_or_scar();
      st[sp++] = apply_binop_q(conn, left, right);
    }
    uint64_t lo = std::max(plo, parts[p].lo), hi = std::min(phi, parts[p].hi);
    if (lo >= hi) continue;
    TruthQuad v = value_rec(c, lvl - 1, parts[p].child_wlo, lo, hi, depth + 1);
    if (c.ix.sub_start(hi) == lo + 1) {
      if (sp >= 3) throw std::logic_error("value_k: piece stack overflow");
      st[sp++] = v;  // complete subformula, fresh value
    } else {
      TruthQuad below = pop_or_scar();
      st[sp++] = compose_q(below, v);
    }
  }
  if (sp != 1) throw std::logic_error("value_k: split did not produce one value");
  return st[0];
}

}  // namespace

TruthPair value_0(const FormulaIndex& ix, Interval fml, Window win, const Valuation& sigma,
                  EvalStats* stats, const BalancedOptions& opt) {
  if (fml.empty() || fml.lo < 1 || fml.hi > ix.lsyms())
    throw std::invalid_argument("value_0: bad interval");
  if (!(win.lo < fml.lo && fml.hi <= win.hi))
    throw std::invalid_argument("value_0: window does not cover the interval");
  unsigned lvl = delta_level_for(win.width());
  if (delta_table()[lvl] != win.width())
    throw std::invalid_argument("value_0: window width is not a Delta value");
  Ctx c{ix, sigma, stats, opt, fml};
  TruthQuad q = value_rec(c, lvl, win.lo, fml.lo - 1, fml.hi, 1);
  // at the interval itself the chain slot and the scar are one unknown
  return {q.v[1][1], q.v[0][0]};
}

Window canonical_window(Interval fml) {
  unsigned lvl = delta_level_for(fml.hi - fml.lo + 1);
  return {fml.lo - 1, fml.lo - 1 + delta_table()[lvl]};
}

bool true_plof(const SymbolWord& w, const Valuation& sigma, EvalStats* stats,
               const BalancedOptions& opt) {
  FormulaIndex ix(w);
  Interval fml{1, ix.lsyms()};
  TruthPair v = value_0(ix, fml, canonical_window(fml), sigma, stats, opt);
  if (!v.is_constant())
    throw std::logic_error("true_plof: unscarred formula produced a scarred pair");
  return v.v_top;
}

Window int_k(Window win, const std::vector<int>& digits) {
  unsigned lvl = delta_level_for(win.width());
  if (delta_table()[lvl] != win.width())
    throw std::invalid_argument("int_k: window width is not a Delta value");
  if (digits.size() > lvl) throw std::invalid_argument("int_k: too many digits");
  for (int p : digits)
    if (p < 1 || p > 4) throw std::invalid_argument("int_k: digit out of 1..4");
  unsigned u = lvl - 1;
  uint64_t shift = int_k_shift_via_vector_sum(u, digits);
  uint64_t m = win.lo + shift;
  return {m, m + delta_table()[lvl - digits.size()]};
}

Interval subfm_k(const FormulaIndex& ix, Interval fml, Window win,
                 const std::vector<int>& digits) {
  uint64_t c = fml.lo - 1, d = fml.hi;
  Window cur = win;
  std::vector<int> prefix;
  for (int p : digits) {
    Breakpoints bp = ix.breakpoints(fml, cur);
    uint64_t lo, hi;
    switch (p) {
      case 1: lo = fml.lo - 1, hi = bp.a1; break;
      case 2: lo = bp.a1, hi = bp.a2; break;
      case 3: lo = bp.a2, hi = bp.a3; break;
      case 4: lo = bp.a4, hi = fml.hi; break;
      default: throw std::invalid_argument("subfm_k: digit out of 1..4");
    }
    c = std::max(c, lo);
    d = std::min(d, hi);
    prefix.push_back(p);
    cur = int_k(win, prefix);
  }
  return {c + 1, d};
}

std::optional<TruthPair> pair_oracle(const FormulaIndex& ix, Interval fml,
                                     const Valuation& sigma) {
  if (fml.empty()) return TruthPair::identity();
  std::vector<TruthPair> st;
  int underflows = 0;
  auto pop = [&]() -> std::optional<TruthPair> {
    if (!st.empty()) {
      TruthPair v = st.back();
      st.pop_back();
      return v;
    }
    if (++underflows > 1) return std::nullopt;
    return TruthPair::identity();  // the scar slot
  };
  for (uint64_t pos = fml.lo; pos <= fml.hi; ++pos) {
    uint8_t code = ix.code_at(pos);
    if (sym_is_atomic(code)) {
      bool b = code == sym::top ? true
               : code == sym::bot ? false
                                  : sigma(ix.var_at(pos));
      st.push_back(TruthPair::constant(b));
    } else if (code == sym::neg) {
      auto a = pop();
      if (!a) return std::nullopt;
      st.push_back(compose(*a, TruthPair{false, true}));
    } else {
      auto b = pop();
      if (!b) return std::nullopt;
      auto a = pop();
      if (!a) return std::nullopt;
      st.push_back(apply_binop_pair(code, *a, *b));
    }
  }
  if (st.size() != 1) return std::nullopt;
  return st.back();
}

}  // namespace logdepth
