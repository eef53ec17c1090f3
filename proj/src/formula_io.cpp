#include <stdexcept>

#include "logdepth/formula.hpp"

namespace logdepth {

namespace {

Sexp lensym_to_sexp(const LenSym& l);
LenSym lensym_from_sexp(const Sexp& e);

Sexp poly_to_sexp(const PolyForm& p) {
  Sexp out = Sexp::list({Sexp::atom("poly")});
  for (const auto& m : p.monos) {
    Sexp mono = Sexp::list({Sexp::atom("mono"), Sexp::num(m.coef)});
    for (const auto& f : m.factors) mono.kids.push_back(lensym_to_sexp(f));
    out.kids.push_back(std::move(mono));
  }
  return out;
}

PolyForm poly_from_sexp(const Sexp& e) {
  if (e.head() != "poly") throw std::invalid_argument("expected (poly ...)");
  PolyForm p;
  for (size_t i = 1; i < e.size(); ++i) {
    const Sexp& m = e.at(i);
    if (m.head() != "mono") throw std::invalid_argument("expected (mono c factors...)");
    PolyForm::Mono mono;
    mono.coef = m.at(1).as_u64();
    for (size_t j = 2; j < m.size(); ++j) mono.factors.push_back(lensym_from_sexp(m.at(j)));
    p.monos.push_back(std::move(mono));
  }
  return p;
}

Sexp set_to_sexp(const SetTerm& s) {
  return Sexp::list({Sexp::atom("set"), Sexp::atom(s.ivar), poly_to_sexp(*s.bound),
                     formula_to_sexp(s.body)});
}

SetTermPtr set_from_sexp(const Sexp& e) {
  if (e.head() != "set") throw std::invalid_argument("expected (set i poly body)");
  SetTerm s;
  s.ivar = e.at(1).text;
  s.bound = std::make_shared<PolyForm>(poly_from_sexp(e.at(2)));
  s.body = formula_from_sexp(e.at(3));
  return std::make_shared<SetTerm>(std::move(s));
}

Sexp lensym_to_sexp(const LenSym& l) {
  if (l.is_lh()) return Sexp::list({Sexp::atom("lh"), set_to_sexp(*l.lh)});
  return Sexp::list({Sexp::atom("len"), Sexp::atom(l.word)});
}

LenSym lensym_from_sexp(const Sexp& e) {
  if (e.head() == "len") return LenSym{e.at(1).text, nullptr};
  if (e.head() == "lh") return LenSym{"", set_from_sexp(e.at(1))};
  throw std::invalid_argument("expected (len x) or (lh set)");
}

Sexp linlen_to_sexp(const LinLen& l) {
  Sexp out = Sexp::list({Sexp::atom("lin"), Sexp::num(l.constant)});
  for (const auto& [c, x] : l.terms)
    out.kids.push_back(Sexp::list({Sexp::num(c), Sexp::atom(x)}));
  return out;
}

LinLen linlen_from_sexp(const Sexp& e) {
  if (e.head() != "lin") throw std::invalid_argument("expected (lin d (c x)...)");
  LinLen l;
  l.constant = e.at(1).as_u64();
  for (size_t i = 2; i < e.size(); ++i)
    l.terms.push_back({e.at(i).at(0).as_u64(), e.at(i).at(1).text});
  return l;
}

}  // namespace

Sexp term_to_sexp(const TermPtr& t) {
  using K = IndexTerm::K;
  switch (t->k) {
    case K::Const: return Sexp::num(t->c);
    case K::Var: return Sexp::atom(t->var);
    case K::Add: return Sexp::list({Sexp::atom("+"), term_to_sexp(t->a), term_to_sexp(t->b)});
    case K::Monus:
      return Sexp::list({Sexp::atom("monus"), term_to_sexp(t->a), term_to_sexp(t->b)});
    case K::MulC:
      return Sexp::list({Sexp::atom("*"), Sexp::num(t->c), term_to_sexp(t->a)});
    case K::DivC:
      return Sexp::list({Sexp::atom("div"), term_to_sexp(t->a), Sexp::num(t->c)});
    case K::ModC:
      return Sexp::list({Sexp::atom("mod"), term_to_sexp(t->a), Sexp::num(t->c)});
    case K::Len: return Sexp::list({Sexp::atom("len-of"), term_to_sexp(t->a)});
    case K::WordLen: return Sexp::list({Sexp::atom("wlen"), Sexp::atom(t->var)});
    case K::WordLen2: return Sexp::list({Sexp::atom("wlen2"), Sexp::atom(t->var)});
    case K::WordVal: return Sexp::list({Sexp::atom("wval"), Sexp::atom(t->var)});
    case K::PartBits:
      return Sexp::list({Sexp::atom("part"), term_to_sexp(t->a), term_to_sexp(t->b),
                         term_to_sexp(t->b2)});
    case K::Gather:
      return Sexp::list({Sexp::atom("gather"), term_to_sexp(t->a), term_to_sexp(t->b),
                         Sexp::num(t->stride), Sexp::num(t->offset), Sexp::num(t->width),
                         Sexp::num(t->marker ? 1 : 0)});
    case K::ClockCat:
      return Sexp::list({Sexp::atom("cat"), term_to_sexp(t->a), term_to_sexp(t->b)});
    case K::PolyVal: return Sexp::list({Sexp::atom("polyval"), poly_to_sexp(*t->poly)});
    case K::LhVal: return Sexp::list({Sexp::atom("lhval"), set_to_sexp(*t->set)});
  }
  throw std::logic_error("term_to_sexp: unknown kind");
}

TermPtr term_from_sexp(const Sexp& e) {
  if (e.is_atom()) {
    if (isdigit((unsigned char)e.text[0])) return tb::cnst(e.as_u64());
    return tb::var(e.text);
  }
  const std::string& h = e.head();
  if (h == "+") return tb::add(term_from_sexp(e.at(1)), term_from_sexp(e.at(2)));
  if (h == "monus") return tb::monus(term_from_sexp(e.at(1)), term_from_sexp(e.at(2)));
  if (h == "*") return tb::mulc(e.at(1).as_u64(), term_from_sexp(e.at(2)));
  if (h == "div") return tb::divc(term_from_sexp(e.at(1)), e.at(2).as_u64());
  if (h == "mod") return tb::modc(term_from_sexp(e.at(1)), e.at(2).as_u64());
  if (h == "len-of") return tb::len(term_from_sexp(e.at(1)));
  if (h == "wlen") return tb::wlen(e.at(1).text);
  if (h == "wlen2") return tb::wlen2(e.at(1).text);
  if (h == "wval") return tb::wval(e.at(1).text);
  if (h == "part")
    return tb::part(term_from_sexp(e.at(1)), term_from_sexp(e.at(2)), term_from_sexp(e.at(3)));
  if (h == "gather")
    return tb::gather(term_from_sexp(e.at(1)), term_from_sexp(e.at(2)),
                      uint32_t(e.at(3).as_u64()), uint32_t(e.at(4).as_u64()),
                      uint32_t(e.at(5).as_u64()), e.at(6).as_u64() != 0);
  if (h == "cat") return tb::cat(term_from_sexp(e.at(1)), term_from_sexp(e.at(2)));
  if (h == "polyval") return tb::polyval(std::make_shared<PolyForm>(poly_from_sexp(e.at(1))));
  if (h == "lhval") return tb::lhval(set_from_sexp(e.at(1)));
  throw std::invalid_argument("unknown term head: " + h);
}

Sexp formula_to_sexp(const FormulaPtr& f) {
  using K = Formula::K;
  switch (f->k) {
    case K::Const: return Sexp::list({Sexp::atom(f->bval ? "top" : "bot")});
    case K::BitWord:
      return Sexp::list({Sexp::atom("bitw"), term_to_sexp(f->t), Sexp::atom(f->wvar)});
    case K::BitLen: {
      Sexp out = Sexp::list({Sexp::atom("bitl"), term_to_sexp(f->t)});
      for (const auto& l : f->lens) out.kids.push_back(lensym_to_sexp(l));
      return out;
    }
    case K::BitIdx:
      return Sexp::list({Sexp::atom("biti"), term_to_sexp(f->t), Sexp::atom(f->ivar)});
    case K::BitIdxLen:
      return Sexp::list({Sexp::atom("bitil"), term_to_sexp(f->t), Sexp::atom(f->ivar)});
    case K::IdxLt:
      return Sexp::list({Sexp::atom("ltl"), term_to_sexp(f->t), lensym_to_sexp(f->lens[0])});
    case K::CmpLe:
      return Sexp::list({Sexp::atom("le"), term_to_sexp(f->t), term_to_sexp(f->t2)});
    case K::IdAtom: {
      Sexp args = Sexp::list({});
      for (const auto& a : f->wargs) {
        if (a.term)
          args.kids.push_back(Sexp::list({Sexp::atom("term"), term_to_sexp(a.term)}));
        else
          args.kids.push_back(Sexp::atom(a.var));
      }
      return Sexp::list({Sexp::atom("id"), Sexp::atom(f->spec_id), std::move(args),
                         term_to_sexp(f->clock)});
    }
    case K::Not: return Sexp::list({Sexp::atom("not"), formula_to_sexp(f->kids[0])});
    case K::And:
    case K::Or: {
      Sexp out = Sexp::list({Sexp::atom(f->k == K::And ? "and" : "or")});
      for (const auto& kf : f->kids) out.kids.push_back(formula_to_sexp(kf));
      return out;
    }
    case K::IndexQ:
      return Sexp::list({Sexp::atom(f->is_forall ? "alli" : "exi"), Sexp::atom(f->ivar),
                         poly_to_sexp(*f->ibound), formula_to_sexp(f->kids[0])});
    case K::LengthQ:
      return Sexp::list({Sexp::atom(f->is_forall ? "alll" : "exl"), Sexp::atom(f->ivar),
                         linlen_to_sexp(f->lbound), formula_to_sexp(f->kids[0])});
    case K::LetIdx:
      return Sexp::list({Sexp::atom("let"), Sexp::atom(f->ivar), term_to_sexp(f->t),
                         formula_to_sexp(f->kids[0])});
  }
  throw std::logic_error("formula_to_sexp: unknown kind");
}

FormulaPtr formula_from_sexp(const Sexp& e) {
  const std::string& h = e.head();
  if (h == "top") return fb::constant(true);
  if (h == "bot") return fb::constant(false);
  if (h == "bitw") return fb::bit_word(term_from_sexp(e.at(1)), e.at(2).text);
  if (h == "bitl") {
    std::vector<LenSym> lens;
    for (size_t i = 2; i < e.size(); ++i) lens.push_back(lensym_from_sexp(e.at(i)));
    return fb::bit_len(term_from_sexp(e.at(1)), std::move(lens));
  }
  if (h == "biti") return fb::bit_idx(term_from_sexp(e.at(1)), e.at(2).text);
  if (h == "bitil") return fb::bit_idx_len(term_from_sexp(e.at(1)), e.at(2).text);
  if (h == "ltl") return fb::idx_lt(term_from_sexp(e.at(1)), lensym_from_sexp(e.at(2)));
  if (h == "le") return fb::le(term_from_sexp(e.at(1)), term_from_sexp(e.at(2)));
  if (h == "id") {
    std::vector<WordArg> args;
    for (const auto& a : e.at(2).kids) {
      if (a.is_atom())
        args.push_back(WordArg::of(a.text));
      else
        args.push_back(WordArg{"", term_from_sexp(a.at(1))});
    }
    return fb::id_atom(e.at(1).text, std::move(args), term_from_sexp(e.at(3)));
  }
  if (h == "not") return fb::lnot(formula_from_sexp(e.at(1)));
  if (h == "and" || h == "or") {
    std::vector<FormulaPtr> kids;
    for (size_t i = 1; i < e.size(); ++i) kids.push_back(formula_from_sexp(e.at(i)));
    return h == "and" ? fb::land(std::move(kids)) : fb::lor(std::move(kids));
  }
  if (h == "alli" || h == "exi")
    return fb::index_q(h == "alli", e.at(1).text,
                       std::make_shared<PolyForm>(poly_from_sexp(e.at(2))),
                       formula_from_sexp(e.at(3)));
  if (h == "alll" || h == "exl")
    return fb::length_q(h == "alll", e.at(1).text, linlen_from_sexp(e.at(2)),
                        formula_from_sexp(e.at(3)));
  if (h == "let")
    return fb::let_idx(e.at(1).text, term_from_sexp(e.at(2)), formula_from_sexp(e.at(3)));
  throw std::invalid_argument("unknown formula head: " + h);
}

}  // namespace logdepth
