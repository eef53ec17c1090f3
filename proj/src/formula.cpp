#include "logdepth/formula.hpp"

#include <stdexcept>

namespace logdepth {

PolyForm PolyForm::constant(uint64_t c) {
  PolyForm p;
  if (c) p.monos.push_back({c, {}});
  return p;
}

PolyForm PolyForm::length_of(const std::string& word, uint64_t coef, uint64_t constant) {
  PolyForm p;
  if (coef) p.monos.push_back({coef, {LenSym{word, nullptr}}});
  if (constant) p.monos.push_back({constant, {}});
  return p;
}

namespace tb {

static TermPtr mk(IndexTerm t) { return std::make_shared<IndexTerm>(std::move(t)); }

TermPtr cnst(uint64_t c) {
  IndexTerm t{IndexTerm::K::Const};
  t.c = c;
  return mk(std::move(t));
}
TermPtr var(std::string v) {
  IndexTerm t{IndexTerm::K::Var};
  t.var = std::move(v);
  return mk(std::move(t));
}
TermPtr add(TermPtr a, TermPtr b) {
  IndexTerm t{IndexTerm::K::Add};
  t.a = std::move(a);
  t.b = std::move(b);
  return mk(std::move(t));
}
TermPtr add(TermPtr a, uint64_t c) { return add(std::move(a), cnst(c)); }
TermPtr monus(TermPtr a, TermPtr b) {
  IndexTerm t{IndexTerm::K::Monus};
  t.a = std::move(a);
  t.b = std::move(b);
  return mk(std::move(t));
}
TermPtr monus(TermPtr a, uint64_t c) { return monus(std::move(a), cnst(c)); }
TermPtr mulc(uint64_t c, TermPtr a) {
  IndexTerm t{IndexTerm::K::MulC};
  t.c = c;
  t.a = std::move(a);
  return mk(std::move(t));
}
TermPtr divc(TermPtr a, uint64_t c) {
  if (!c) throw std::invalid_argument("divc: zero divisor");
  IndexTerm t{IndexTerm::K::DivC};
  t.c = c;
  t.a = std::move(a);
  return mk(std::move(t));
}
TermPtr modc(TermPtr a, uint64_t c) {
  if (!c) throw std::invalid_argument("modc: zero divisor");
  IndexTerm t{IndexTerm::K::ModC};
  t.c = c;
  t.a = std::move(a);
  return mk(std::move(t));
}
TermPtr len(TermPtr a) {
  IndexTerm t{IndexTerm::K::Len};
  t.a = std::move(a);
  return mk(std::move(t));
}
TermPtr wlen(std::string x) {
  IndexTerm t{IndexTerm::K::WordLen};
  t.var = std::move(x);
  return mk(std::move(t));
}
TermPtr wlen2(std::string x) {
  IndexTerm t{IndexTerm::K::WordLen2};
  t.var = std::move(x);
  return mk(std::move(t));
}
TermPtr wval(std::string x) {
  IndexTerm t{IndexTerm::K::WordVal};
  t.var = std::move(x);
  return mk(std::move(t));
}
TermPtr part(TermPtr a, TermPtr lo, TermPtr hi) {
  IndexTerm t{IndexTerm::K::PartBits};
  t.a = std::move(a);
  t.b = std::move(lo);
  t.b2 = std::move(hi);
  return mk(std::move(t));
}
TermPtr gather(TermPtr src, TermPtr blocks, uint32_t stride, uint32_t offset,
               uint32_t width, bool marker) {
  IndexTerm t{IndexTerm::K::Gather};
  t.a = std::move(src);
  t.b = std::move(blocks);
  t.stride = stride;
  t.offset = offset;
  t.width = width;
  t.marker = marker;
  return mk(std::move(t));
}
TermPtr cat(TermPtr a, TermPtr b) {
  IndexTerm t{IndexTerm::K::ClockCat};
  t.a = std::move(a);
  t.b = std::move(b);
  return mk(std::move(t));
}
TermPtr polyval(PolyPtr p) {
  IndexTerm t{IndexTerm::K::PolyVal};
  t.poly = std::move(p);
  return mk(std::move(t));
}
TermPtr lhval(SetTermPtr s) {
  IndexTerm t{IndexTerm::K::LhVal};
  t.set = std::move(s);
  return mk(std::move(t));
}
TermPtr linear(const std::vector<std::pair<uint64_t, std::string>>& terms, uint64_t d) {
  TermPtr acc = cnst(d);
  for (const auto& [c, v] : terms) {
    if (!c) continue;
    TermPtr piece = c == 1 ? var(v) : mulc(c, var(v));
    acc = (acc->k == IndexTerm::K::Const && acc->c == 0) ? piece : add(acc, piece);
  }
  return acc;
}
TermPtr linlen_term(const LinLen& l) {
  TermPtr acc = cnst(l.constant);
  for (const auto& [c, x] : l.terms) {
    if (!c) continue;
    TermPtr piece = c == 1 ? wlen2(x) : mulc(c, wlen2(x));
    acc = (acc->k == IndexTerm::K::Const && acc->c == 0) ? piece : add(acc, piece);
  }
  return acc;
}

}  // namespace tb

namespace fb {

static FormulaPtr mk(Formula f) { return std::make_shared<Formula>(std::move(f)); }

FormulaPtr constant(bool b) {
  Formula f{Formula::K::Const};
  f.bval = b;
  return mk(std::move(f));
}
FormulaPtr bit_word(TermPtr t, std::string x) {
  Formula f{Formula::K::BitWord};
  f.t = std::move(t);
  f.wvar = std::move(x);
  return mk(std::move(f));
}
FormulaPtr bit_len(TermPtr t, std::vector<LenSym> lens) {
  if (lens.empty() || lens.size() > 2)
    throw std::invalid_argument("bit_len: one or two length factors");
  Formula f{Formula::K::BitLen};
  f.t = std::move(t);
  f.lens = std::move(lens);
  return mk(std::move(f));
}
FormulaPtr bit_idx(TermPtr t, std::string i) {
  Formula f{Formula::K::BitIdx};
  f.t = std::move(t);
  f.ivar = std::move(i);
  return mk(std::move(f));
}
FormulaPtr bit_idx_len(TermPtr t, std::string i) {
  Formula f{Formula::K::BitIdxLen};
  f.t = std::move(t);
  f.ivar = std::move(i);
  return mk(std::move(f));
}
FormulaPtr idx_lt(TermPtr t, LenSym len) {
  Formula f{Formula::K::IdxLt};
  f.t = std::move(t);
  f.lens = {std::move(len)};
  return mk(std::move(f));
}
FormulaPtr le(TermPtr a, TermPtr b) {
  Formula f{Formula::K::CmpLe};
  f.t = std::move(a);
  f.t2 = std::move(b);
  return mk(std::move(f));
}
FormulaPtr eq(TermPtr a, TermPtr b) { return land({le(a, b), le(b, a)}); }
FormulaPtr lt(TermPtr a, TermPtr b) { return le(tb::add(std::move(a), 1), std::move(b)); }
FormulaPtr id_atom(std::string spec, std::vector<WordArg> args, TermPtr clock) {
  Formula f{Formula::K::IdAtom};
  f.spec_id = std::move(spec);
  f.wargs = std::move(args);
  f.clock = std::move(clock);
  return mk(std::move(f));
}
FormulaPtr land(std::vector<FormulaPtr> kids) {
  Formula f{Formula::K::And};
  f.kids = std::move(kids);
  return mk(std::move(f));
}
FormulaPtr lor(std::vector<FormulaPtr> kids) {
  Formula f{Formula::K::Or};
  f.kids = std::move(kids);
  return mk(std::move(f));
}
FormulaPtr lnot(FormulaPtr f) {
  Formula g{Formula::K::Not};
  g.kids = {std::move(f)};
  return mk(std::move(g));
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return lor({lnot(std::move(a)), std::move(b)}); }
FormulaPtr index_q(bool forall, std::string v, PolyPtr bound, FormulaPtr body) {
  Formula f{Formula::K::IndexQ};
  f.is_forall = forall;
  f.ivar = std::move(v);
  f.ibound = std::move(bound);
  f.kids = {std::move(body)};
  return mk(std::move(f));
}
FormulaPtr length_q(bool forall, std::string y, LinLen bound, FormulaPtr body) {
  Formula f{Formula::K::LengthQ};
  f.is_forall = forall;
  f.ivar = std::move(y);
  f.lbound = std::move(bound);
  f.kids = {std::move(body)};
  return mk(std::move(f));
}
FormulaPtr let_idx(std::string v, TermPtr t, FormulaPtr body) {
  Formula f{Formula::K::LetIdx};
  f.ivar = std::move(v);
  f.t = std::move(t);
  f.kids = {std::move(body)};
  return mk(std::move(f));
}

}  // namespace fb

const Nat& Env::word(const std::string& n) const {
  auto it = words.find(n);
  if (it == words.end()) throw std::invalid_argument("unbound word variable " + n);
  return it->second;
}
const Nat& Env::index(const std::string& n) const {
  auto it = indices.find(n);
  if (it == indices.end()) throw std::invalid_argument("unbound index variable " + n);
  return it->second;
}

// ----------------------------------------------------------------- eval

namespace {

struct Evaler {
  Env& env;
  const IdEval& idcb;
  const EvalLimits& lim;

  Nat term(const IndexTerm& t) {
    using K = IndexTerm::K;
    switch (t.k) {
      case K::Const: return Nat(t.c);
      case K::Var: return env.index(t.var);
      case K::Add: return term(*t.a) + term(*t.b);
      case K::Monus: return term(*t.a).monus(term(*t.b));
      case K::MulC: {
        Nat v = term(*t.a);
        Nat acc;
        for (uint64_t bit = 0; bit < 64; ++bit)
          if ((t.c >> bit) & 1) acc = acc + v.shl(bit);
        return acc;
      }
      case K::DivC: {
        Nat v = term(*t.a);
        if (v.fits_u64()) return Nat(v.to_u64() / t.c);
        // long division by a word constant
        Nat q;
        unsigned __int128 rem = 0;
        for (uint64_t i = v.length(); i-- > 0;) {
          rem = (rem << 1) | unsigned(v.bit(i));
          if (rem >= t.c) {
            rem -= t.c;
            q.set_bit(i, true);
          }
        }
        return q;
      }
      case K::ModC: {
        Nat v = term(*t.a);
        if (v.fits_u64()) return Nat(v.to_u64() % t.c);
        unsigned __int128 rem = 0;
        for (uint64_t i = v.length(); i-- > 0;) rem = ((rem << 1) | unsigned(v.bit(i))) % t.c;
        return Nat(uint64_t(rem));
      }
      case K::Len: return Nat(term(*t.a).length());
      case K::WordLen: return Nat(env.word(t.var).length());
      case K::WordLen2: return Nat(len2(env.word(t.var)));
      case K::WordVal: return env.word(t.var);
      case K::PartBits: {
        Nat v = term(*t.a);
        uint64_t lo = term(*t.b).to_u64();
        uint64_t hi = term(*t.b2).to_u64();
        return v.part(lo, hi);
      }
      case K::Gather: {
        Nat src = term(*t.a);
        uint64_t blocks = term(*t.b).to_u64();
        Nat out = t.marker ? Nat::power_of_two(uint64_t(t.width) * blocks) : Nat();
        for (uint64_t bl = 0; bl < blocks; ++bl)
          for (uint32_t wbit = 0; wbit < t.width; ++wbit)
            if (src.bit(t.offset + t.stride * bl + wbit))
              out.set_bit(uint64_t(t.width) * bl + wbit, true);
        return out;
      }
      case K::ClockCat: return concat_word_checked(term(*t.a), term(*t.b));
      case K::PolyVal: return Nat(poly(*t.poly));
      case K::LhVal: return Nat(lh(*t.set));
    }
    throw std::logic_error("eval_term: unknown kind");
  }

  static Nat concat_word_checked(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero())
      throw std::invalid_argument("clock concatenation needs coded words (>= 1)");
    return a.shl(b.length() - 1) + b.part(0, b.length() - 1);
  }

  uint64_t lensym(const LenSym& s) {
    return s.is_lh() ? lh(*s.lh) : env.word(s.word).length();
  }

  uint64_t poly(const PolyForm& p) {
    unsigned __int128 acc = 0;
    for (const auto& m : p.monos) {
      unsigned __int128 term = m.coef;
      for (const auto& f : m.factors) term *= lensym(f);
      acc += term;
      if (acc > ~uint64_t{0}) throw std::overflow_error("poly bound overflow");
    }
    return uint64_t(acc);
  }

  uint64_t lh(const SetTerm& s) {
    uint64_t bound = poly(*s.bound);
    if (bound > lim.enum_limit) throw std::length_error("lh: enumeration over budget");
    uint64_t best = 0;
    bool found = false;
    auto saved = env.indices.find(s.ivar) != env.indices.end()
                     ? std::optional<Nat>(env.indices[s.ivar])
                     : std::nullopt;
    for (uint64_t i = 0; i < bound; ++i) {
      env.indices[s.ivar] = Nat(i);
      if (formula(*s.body)) {
        best = i;
        found = true;
      }
    }
    if (saved)
      env.indices[s.ivar] = *saved;
    else
      env.indices.erase(s.ivar);
    return found ? best + 1 : 0;  // "0 otherwise"
  }

  bool formula(const Formula& f) {
    using K = Formula::K;
    switch (f.k) {
      case K::Const: return f.bval;
      case K::BitWord: {
        Nat pos = term(*f.t);
        return pos.fits_u64() && env.word(f.wvar).bit(pos.to_u64());
      }
      case K::BitLen: {
        unsigned __int128 v = lensym(f.lens[0]);
        if (f.lens.size() == 2) v *= lensym(f.lens[1]);
        Nat pos = term(*f.t);
        if (!pos.fits_u64() || pos.to_u64() >= 128) return false;
        return (v >> pos.to_u64()) & 1;
      }
      case K::BitIdx: {
        Nat pos = term(*f.t);
        return pos.fits_u64() && env.index(f.ivar).bit(pos.to_u64());
      }
      case K::BitIdxLen: {
        Nat pos = term(*f.t);
        return pos.fits_u64() && Nat(env.index(f.ivar).length()).bit(pos.to_u64());
      }
      case K::IdxLt: return term(*f.t) < Nat(lensym(f.lens[0]));
      case K::CmpLe: return term(*f.t) <= term(*f.t2);
      case K::IdAtom: {
        if (!idcb) throw std::invalid_argument("eval_sb0: no id evaluator provided");
        std::vector<Nat> args;
        args.reserve(f.wargs.size());
        for (const auto& a : f.wargs) {
          if (a.term) throw std::invalid_argument("eval_sb0: ID atom over a compound term");
          args.push_back(env.word(a.var));
        }
        return idcb(f.spec_id, args, term(*f.clock));
      }
      case K::Not: return !formula(*f.kids[0]);
      case K::And:
        for (const auto& kf : f.kids)
          if (!formula(*kf)) return false;
        return true;
      case K::Or:
        for (const auto& kf : f.kids)
          if (formula(*kf)) return true;
        return false;
      case K::IndexQ: {
        uint64_t bound = poly(*f.ibound);
        if (bound > lim.enum_limit) throw std::length_error("index quantifier over budget");
        bool result = f.is_forall;
        auto saved = env.indices.find(f.ivar) != env.indices.end()
                         ? std::optional<Nat>(env.indices[f.ivar])
                         : std::nullopt;
        for (uint64_t v = 0; v < bound; ++v) {
          env.indices[f.ivar] = Nat(v);
          bool b = formula(*f.kids[0]);
          if (f.is_forall && !b) {
            result = false;
            break;
          }
          if (!f.is_forall && b) {
            result = true;
            break;
          }
        }
        if (saved)
          env.indices[f.ivar] = *saved;
        else
          env.indices.erase(f.ivar);
        return result;
      }
      case K::LengthQ: {
        uint64_t ell = eval_linlen(f.lbound, env);
        if (ell >= 63 || (uint64_t{1} << ell) > lim.enum_limit)
          throw std::length_error("length quantifier over budget");
        uint64_t count = uint64_t{1} << ell;  // all y with |y| <= ell
        bool result = f.is_forall;
        auto saved = env.words.find(f.ivar) != env.words.end()
                         ? std::optional<Nat>(env.words[f.ivar])
                         : std::nullopt;
        for (uint64_t v = 0; v < count; ++v) {
          env.words[f.ivar] = Nat(v);
          bool b = formula(*f.kids[0]);
          if (f.is_forall && !b) {
            result = false;
            break;
          }
          if (!f.is_forall && b) {
            result = true;
            break;
          }
        }
        if (saved)
          env.words[f.ivar] = *saved;
        else
          env.words.erase(f.ivar);
        return result;
      }
      case K::LetIdx: {
        Nat v = term(*f.t);
        auto saved = env.indices.find(f.ivar) != env.indices.end()
                         ? std::optional<Nat>(env.indices[f.ivar])
                         : std::nullopt;
        env.indices[f.ivar] = std::move(v);
        bool b = formula(*f.kids[0]);
        if (saved)
          env.indices[f.ivar] = *saved;
        else
          env.indices.erase(f.ivar);
        return b;
      }
    }
    throw std::logic_error("eval_sb0: unknown kind");
  }
};

}  // namespace

Nat eval_term(const TermPtr& t, const Env& env, const IdEval& idcb, const EvalLimits& lim) {
  Env& mut = const_cast<Env&>(env);
  Evaler ev{mut, idcb, lim};
  return ev.term(*t);
}

uint64_t eval_poly(const PolyForm& p, const Env& env, const IdEval& idcb,
                   const EvalLimits& lim) {
  Env& mut = const_cast<Env&>(env);
  Evaler ev{mut, idcb, lim};
  return ev.poly(p);
}

uint64_t eval_linlen(const LinLen& l, const Env& env) {
  uint64_t acc = l.constant;
  for (const auto& [c, x] : l.terms) acc += c * len2(env.word(x));
  return acc;
}

uint64_t eval_lh(const SetTerm& s, const Env& env, const IdEval& idcb,
                 const EvalLimits& lim) {
  Env& mut = const_cast<Env&>(env);
  Evaler ev{mut, idcb, lim};
  return ev.lh(s);
}

bool eval_sb0(const FormulaPtr& f, const Env& env, const IdEval& idcb,
              const EvalLimits& lim) {
  Env& mut = const_cast<Env&>(env);
  Evaler ev{mut, idcb, lim};
  return ev.formula(*f);
}

// ------------------------------------------------------- stratification

namespace {

// linear form over index variables: sums of constants and c * var
bool is_linear_index_term(const IndexTerm& t,
                          const std::vector<std::string>& index_vars) {
  using K = IndexTerm::K;
  switch (t.k) {
    case K::Const: return true;
    case K::Var:
      for (const auto& v : index_vars)
        if (v == t.var) return true;
      return false;
    case K::Add: return is_linear_index_term(*t.a, index_vars) &&
                        is_linear_index_term(*t.b, index_vars);
    case K::MulC: return is_linear_index_term(*t.a, index_vars);
    default: return false;
  }
}

bool is_word(const std::string& v, const std::vector<std::string>& words) {
  for (const auto& w : words)
    if (w == v) return true;
  return false;
}

bool check_strat(const Formula& f, std::vector<std::string> words,
                 std::vector<std::string> idxs) {
  using K = Formula::K;
  switch (f.k) {
    case K::Const: return true;
    case K::BitWord:
      return is_linear_index_term(*f.t, idxs) && is_word(f.wvar, words);
    case K::BitLen:
      if (!is_linear_index_term(*f.t, idxs)) return false;
      for (const auto& l : f.lens)
        if (l.is_lh() || !is_word(l.word, words)) return false;
      return true;
    case K::BitIdx:
    case K::BitIdxLen:
      return is_linear_index_term(*f.t, idxs) && is_word(f.ivar, idxs);
    case K::IdxLt:
      // the left side must be a plain index variable
      return f.t->k == IndexTerm::K::Var && is_word(f.t->var, idxs) &&
             !f.lens[0].is_lh() && is_word(f.lens[0].word, words);
    case K::CmpLe:
      return is_linear_index_term(*f.t, idxs) && is_linear_index_term(*f.t2, idxs);
    case K::IdAtom:
      for (const auto& a : f.wargs)
        if (a.term || !is_word(a.var, words)) return false;
      return f.clock->k == IndexTerm::K::Var && is_word(f.clock->var, idxs);
    case K::Not:
    case K::And:
    case K::Or:
      for (const auto& kf : f.kids)
        if (!check_strat(*kf, words, idxs)) return false;
      return true;
    case K::IndexQ: {
      for (const auto& m : f.ibound->monos)
        for (const auto& fac : m.factors)
          if (fac.is_lh() || !is_word(fac.word, words)) return false;
      idxs.push_back(f.ivar);
      return check_strat(*f.kids[0], words, idxs);
    }
    case K::LengthQ: {
      for (const auto& [c, x] : f.lbound.terms)
        if (!is_word(x, words)) return false;
      words.push_back(f.ivar);
      return check_strat(*f.kids[0], words, idxs);
    }
    case K::LetIdx: return false;  // derived form, not in the grammar
  }
  return false;
}

}  // namespace

bool check_stratified(const FormulaPtr& f, const std::vector<std::string>& word_vars,
                      const std::vector<std::string>& index_vars) {
  return check_strat(*f, word_vars, index_vars);
}

// ------------------------------------------------------- set substitution

namespace {

bool term_mentions_word(const IndexTerm& t, const std::string& y) {
  using K = IndexTerm::K;
  if ((t.k == K::WordLen || t.k == K::WordLen2 || t.k == K::WordVal) && t.var == y)
    return true;
  for (const TermPtr* c : {&t.a, &t.b, &t.b2})
    if (*c && term_mentions_word(**c, y)) return true;
  if (t.poly)
    for (const auto& m : t.poly->monos)
      for (const auto& fac : m.factors)
        if (!fac.is_lh() && fac.word == y) return true;
  return false;
}

TermPtr subst_term(const TermPtr& t, const std::string& y, const SetTermPtr& s) {
  if (!term_mentions_word(*t, y)) return t;
  if (t->k == IndexTerm::K::WordLen && t->var == y) return tb::lhval(s);
  if (t->k == IndexTerm::K::Var || t->k == IndexTerm::K::Const) return t;
  if (t->k == IndexTerm::K::WordLen2 || t->k == IndexTerm::K::WordVal)
    throw std::invalid_argument("subst_set: " + t->var +
                                " occurs in a term position Definition 5.5 does not cover");
  IndexTerm out = *t;
  if (out.a) out.a = subst_term(out.a, y, s);
  if (out.b) out.b = subst_term(out.b, y, s);
  if (out.b2) out.b2 = subst_term(out.b2, y, s);
  if (out.poly) throw std::invalid_argument("subst_set: |" + y + "| inside a nested bound");
  return std::make_shared<IndexTerm>(std::move(out));
}

LenSym subst_lensym(const LenSym& l, const std::string& y, const SetTermPtr& s) {
  if (!l.is_lh() && l.word == y) return LenSym{"", s};
  return l;
}

FormulaPtr subst(const FormulaPtr& f, const std::string& y, const SetTermPtr& s) {
  using K = Formula::K;
  switch (f->k) {
    case K::Const: return f;
    case K::BitWord: {
      TermPtr t = subst_term(f->t, y, s);
      if (f->wvar != y) {
        if (t == f->t) return f;
        Formula g = *f;
        g.t = t;
        return std::make_shared<Formula>(std::move(g));
      }
      // Bit(j, y) = 1  ~>  j < p|x...| /\ A0(x..., j)
      return fb::land({fb::lt(t, tb::polyval(s->bound)), fb::let_idx(s->ivar, t, s->body)});
    }
    case K::BitLen:
    case K::IdxLt: {
      Formula g = *f;
      g.t = subst_term(f->t, y, s);
      for (auto& l : g.lens) l = subst_lensym(l, y, s);
      return std::make_shared<Formula>(std::move(g));
    }
    case K::BitIdx:
    case K::BitIdxLen:
    case K::CmpLe: {
      Formula g = *f;
      g.t = subst_term(f->t, y, s);
      if (g.t2) g.t2 = subst_term(f->t2, y, s);
      return std::make_shared<Formula>(std::move(g));
    }
    case K::IdAtom: {
      for (const auto& a : f->wargs)
        if (a.var == y)
          throw std::invalid_argument(
              "subst_set: " + y + " occurs in an inductively defined atom (Definition 5.5 "
              "item 5 is handled by flatten_iterated, not symbolically)");
      if (f->clock && term_mentions_word(*f->clock, y))
        throw std::invalid_argument("subst_set: " + y + " occurs in an ID-atom clock term");
      return f;
    }
    case K::Not:
    case K::And:
    case K::Or: {
      Formula g = *f;
      for (auto& kf : g.kids) kf = subst(kf, y, s);
      return std::make_shared<Formula>(std::move(g));
    }
    case K::IndexQ: {
      Formula g = *f;
      PolyForm p = *f->ibound;
      for (auto& m : p.monos)
        for (auto& fac : m.factors) fac = subst_lensym(fac, y, s);
      g.ibound = std::make_shared<PolyForm>(std::move(p));
      g.kids = {subst(f->kids[0], y, s)};
      return std::make_shared<Formula>(std::move(g));
    }
    case K::LengthQ: {
      if (f->ivar == y) return f;  // shadowed
      for (const auto& [c, x] : f->lbound.terms)
        if (x == y)
          throw std::invalid_argument("subst_set: ||" + y +
                                      "|| in a length-quantifier bound is not covered");
      Formula g = *f;
      g.kids = {subst(f->kids[0], y, s)};
      return std::make_shared<Formula>(std::move(g));
    }
    case K::LetIdx: {
      Formula g = *f;
      g.t = subst_term(f->t, y, s);
      g.kids = {subst(f->kids[0], y, s)};
      return std::make_shared<Formula>(std::move(g));
    }
  }
  throw std::logic_error("subst_set: unknown kind");
}

}  // namespace

FormulaPtr subst_set(const FormulaPtr& f, const std::string& y, const SetTermPtr& s) {
  return subst(f, y, s);
}

}  // namespace logdepth
