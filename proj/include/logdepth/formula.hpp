#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "logdepth/nat.hpp"
#include "logdepth/sexpr.hpp"

namespace logdepth {

struct Formula;
struct IndexTerm;
using FormulaPtr = std::shared_ptr<const Formula>;
using TermPtr = std::shared_ptr<const IndexTerm>;

// {i < p|x...| : body(x..., i)}
struct SetTerm;
using SetTermPtr = std::shared_ptr<const SetTerm>;

// A length-like factor: |x| for a word variable, or lh(s) for a set term.
struct LenSym {
  std::string word;  // set when lh is null
  SetTermPtr lh;
  bool is_lh() const { return lh != nullptr; }
};

// Polynomial in lengths with nonnegative coefficients: sum of c * prod(factors).
struct PolyForm {
  struct Mono {
    uint64_t coef = 0;
    std::vector<LenSym> factors;  // empty = constant monomial
  };
  std::vector<Mono> monos;

  static PolyForm constant(uint64_t c);
  static PolyForm length_of(const std::string& word, uint64_t coef = 1,
                            uint64_t constant = 0);
};
using PolyPtr = std::shared_ptr<const PolyForm>;

// Linear form over double lengths: sum c_k * ||x_k|| + d.
struct LinLen {
  std::vector<std::pair<uint64_t, std::string>> terms;
  uint64_t constant = 0;
};

// Index-valued terms. Linear forms over index variables are the
// stratified-grammar core; the remaining ops are the documented derived
// forms the reductions need, each definable by a stratified formula.
struct IndexTerm {
  enum class K {
    Const,     // c
    Var,       // index variable
    Add,       // a + b
    Monus,     // a - b (cut off at 0)
    MulC,      // c * a
    DivC,      // floor(a / c), c > 0
    ModC,      // a mod c, c > 0
    Len,       // |a|
    WordLen,   // |x|
    WordLen2,  // ||x||
    WordVal,   // the word variable's value
    PartBits,  // a[lo, hi)
    Gather,    // marker?2^(width*blocks):0 + bits offset+stride*b+w -> width*b+w
    ClockCat,  // word concatenation a * b (both >= 1)
    PolyVal,   // value of a PolyForm
    LhVal      // lh(set term)
  };
  K k;
  uint64_t c = 0;
  std::string var;
  TermPtr a, b, b2;
  uint32_t stride = 0, offset = 0, width = 0;
  bool marker = false;
  PolyPtr poly;
  SetTermPtr set;
};

// term builders
namespace tb {
TermPtr cnst(uint64_t c);
TermPtr var(std::string v);
TermPtr add(TermPtr a, TermPtr b);
TermPtr add(TermPtr a, uint64_t c);
TermPtr monus(TermPtr a, TermPtr b);
TermPtr monus(TermPtr a, uint64_t c);
TermPtr mulc(uint64_t c, TermPtr a);
TermPtr divc(TermPtr a, uint64_t c);
TermPtr modc(TermPtr a, uint64_t c);
TermPtr len(TermPtr a);
TermPtr wlen(std::string x);
TermPtr wlen2(std::string x);
TermPtr wval(std::string x);
TermPtr part(TermPtr a, TermPtr lo, TermPtr hi);
TermPtr gather(TermPtr src, TermPtr blocks, uint32_t stride, uint32_t offset,
               uint32_t width, bool marker);
TermPtr cat(TermPtr a, TermPtr b);
TermPtr polyval(PolyPtr p);
TermPtr lhval(SetTermPtr s);
// sum c_k * v_k + d over index variables (stays in the strict grammar)
TermPtr linear(const std::vector<std::pair<uint64_t, std::string>>& terms, uint64_t d);
TermPtr linlen_term(const LinLen& l);  // sum c * ||x|| + d as a term
}  // namespace tb

// word argument of an inductively defined predicate; the term alternative
// exists so that check_stratified has something concrete to reject
struct WordArg {
  std::string var;
  TermPtr term;  // ill-formed unless null
  static WordArg of(std::string v) { return {std::move(v), nullptr}; }
};

struct Formula {
  enum class K {
    Const,      // truth constant
    BitWord,    // Bit(t, x) = 1
    BitLen,     // Bit(t, L1 [* L2]) = 1 for length-like factors
    BitIdx,     // Bit(t, i) = 1
    BitIdxLen,  // Bit(t, |i|) = 1
    IdxLt,      // t < L (L a length-like factor)
    CmpLe,      // t1 <= t2
    IdAtom,     // A(y..., clock)
    Not,
    And,        // n-ary; empty = truth
    Or,         // n-ary; empty = falsity
    IndexQ,     // Q v < poly . body
    LengthQ,    // Q |y| <= linlen . body
    LetIdx      // let v = t in body (derived form)
  };
  K k;
  bool bval = false;
  TermPtr t, t2;
  std::string wvar;           // BitWord
  std::vector<LenSym> lens;   // BitLen (1..2), IdxLt (1)
  std::string ivar;           // BitIdx/BitIdxLen var, quantifier/let variable
  std::vector<FormulaPtr> kids;
  std::string spec_id;        // IdAtom
  std::vector<WordArg> wargs;
  TermPtr clock;
  bool is_forall = false;
  PolyPtr ibound;
  LinLen lbound;
};

struct SetTerm {
  PolyPtr bound;
  std::string ivar;
  FormulaPtr body;
};

// formula builders
namespace fb {
FormulaPtr constant(bool b);
FormulaPtr bit_word(TermPtr t, std::string x);
FormulaPtr bit_len(TermPtr t, std::vector<LenSym> lens);
FormulaPtr bit_idx(TermPtr t, std::string i);
FormulaPtr bit_idx_len(TermPtr t, std::string i);
FormulaPtr idx_lt(TermPtr t, LenSym len);
FormulaPtr le(TermPtr a, TermPtr b);
FormulaPtr eq(TermPtr a, TermPtr b);      // both <=
FormulaPtr lt(TermPtr a, TermPtr b);      // a + 1 <= b
FormulaPtr id_atom(std::string spec, std::vector<WordArg> args, TermPtr clock);
FormulaPtr land(std::vector<FormulaPtr> kids);
FormulaPtr lor(std::vector<FormulaPtr> kids);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr index_q(bool forall, std::string v, PolyPtr bound, FormulaPtr body);
FormulaPtr length_q(bool forall, std::string y, LinLen bound, FormulaPtr body);
FormulaPtr let_idx(std::string v, TermPtr t, FormulaPtr body);
}  // namespace fb

struct Env {
  std::unordered_map<std::string, Nat> words;
  std::unordered_map<std::string, Nat> indices;

  const Nat& word(const std::string& n) const;
  const Nat& index(const std::string& n) const;
};

// callback deciding inductively defined atoms: (spec id, args, clock)
using IdEval = std::function<bool(const std::string&, const std::vector<Nat>&, const Nat&)>;

struct EvalLimits {
  uint64_t enum_limit = uint64_t{1} << 22;  // quantifier range guard
};

Nat eval_term(const TermPtr& t, const Env& env, const IdEval& idcb = {},
              const EvalLimits& lim = {});
uint64_t eval_poly(const PolyForm& p, const Env& env, const IdEval& idcb = {},
                   const EvalLimits& lim = {});
uint64_t eval_linlen(const LinLen& l, const Env& env);
uint64_t eval_lh(const SetTerm& s, const Env& env, const IdEval& idcb = {},
                 const EvalLimits& lim = {});
bool eval_sb0(const FormulaPtr& f, const Env& env, const IdEval& idcb = {},
              const EvalLimits& lim = {});

// Definition 5.1 / 5.4 membership: linear index terms only, length factors
// over word variables, ID atoms applied to plain variables with a plain
// index-variable clock, quantifier bounds over the declared word variables.
bool check_stratified(const FormulaPtr& f, const std::vector<std::string>& word_vars,
                      const std::vector<std::string>& index_vars);

// Definition 5.5: substitute the set term s for the word variable y.
// Throws std::invalid_argument when y occurs in a position the definition
// does not cover (ID atoms, derived terms other than |y|).
FormulaPtr subst_set(const FormulaPtr& f, const std::string& y, const SetTermPtr& s);

// s-expression io
Sexp formula_to_sexp(const FormulaPtr& f);
FormulaPtr formula_from_sexp(const Sexp& e);
Sexp term_to_sexp(const TermPtr& t);
TermPtr term_from_sexp(const Sexp& e);

}  // namespace logdepth
